//! Pseudo-sphere embedding, projective conformal chart, induced metric and
//! Killing fields.
//!
//! Bulk coordinates are ordered (X^1, X^2, X^3, X^4, X^0); chart coordinates
//! (x^0..x^3) carry the Minkowski metric diag(1,-1,-1,-1). The chart maps
//! `X^mu = Omega x^mu`, `X^4 = -l Omega (1 + sigma^2/4l^2)` with
//! `Omega = (1 - sigma^2/4l^2)^{-1}`; it covers everything except the point
//! of projection at `X^4 = +l`.

use num::BigRational;

use crate::algebras::{eta_bulk, eta_minkowski, BULK_LABELS};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldScalar, NumericScalar, Scalar};
use num::traits::Zero;

/// A chart point with its derived embedding data.
#[derive(Clone, Debug)]
pub struct ChartPoint<R: Scalar> {
    pub ell: R,
    /// Intrinsic coordinates (x^0, x^1, x^2, x^3).
    pub x: [R; 4],
    /// sigma^2 = eta_mu_nu x^mu x^nu.
    pub sigma_sq: R,
    pub omega: R,
    /// Embedded bulk coordinates in label order (X^1, X^2, X^3, X^4, X^0).
    pub bulk: [R; 5],
}

/// Minkowski square of a chart coordinate tuple.
pub fn sigma_squared<R: Scalar>(x: &[R; 4]) -> R {
    let mut acc = R::zero();
    for (mu, xi) in x.iter().enumerate() {
        let term = xi.clone() * xi.clone();
        acc = acc + if eta_minkowski(mu as u8) == 1 { term } else { -term };
    }
    acc
}

/// Embeds a chart point onto the pseudo-sphere of radius `ell`.
pub fn embed<R: FieldScalar + NumericScalar>(x: &[R; 4], ell: &R) -> Result<ChartPoint<R>> {
    let sigma_sq = sigma_squared(x);
    let four_ell_sq = R::from_int(4) * ell.clone() * ell.clone();
    let u = sigma_sq.clone() / four_ell_sq;
    let denom = R::one() - u.clone();
    if denom.to_f64().abs() <= 1e-14 * (1.0 + u.to_f64().abs()) {
        return Err(Error::OnAbsolute);
    }
    let omega = denom.recip();
    let x4 = -(ell.clone() * omega.clone() * (R::one() + u));
    let bulk = [
        omega.clone() * x[1].clone(),
        omega.clone() * x[2].clone(),
        omega.clone() * x[3].clone(),
        x4,
        omega.clone() * x[0].clone(),
    ];
    Ok(ChartPoint { ell: ell.clone(), x: x.clone(), sigma_sq, omega, bulk })
}

/// Inverts the chart: `Omega = (1 - X^4/l)/2`, `x^mu = X^mu / Omega`.
/// The projection point `X^4 = +l` is excluded.
pub fn unembed<R: FieldScalar + NumericScalar>(bulk: &[R; 5], ell: &R) -> Result<[R; 4]> {
    let omega = (R::one() - bulk[3].clone() / ell.clone()) * R::from_ratio(1, 2);
    if omega.to_f64().abs() <= 1e-12 {
        return Err(Error::NorthPole);
    }
    let inv = omega.recip();
    Ok([
        bulk[4].clone() * inv.clone(),
        bulk[0].clone() * inv.clone(),
        bulk[1].clone() * inv.clone(),
        bulk[2].clone() * inv,
    ])
}

/// `X . X - l^2` with the bulk metric; zero on the pseudo-sphere.
pub fn pseudo_sphere_residual<R: Scalar>(bulk: &[R; 5], ell: &R) -> R {
    let mut acc = -(ell.clone() * ell.clone());
    for (i, xi) in bulk.iter().enumerate() {
        let term = xi.clone() * xi.clone();
        acc = acc + if eta_bulk(BULK_LABELS[i]) == 1 { term } else { -term };
    }
    acc
}

/// Jacobian `dX^A/dx^mu` of the embedding, from the closed-form derivative
/// of the chart (exact in rational arithmetic). Rows are bulk positions in
/// label order, columns chart indices.
pub fn embedding_jacobian<R: FieldScalar + NumericScalar>(p: &ChartPoint<R>) -> [[R; 4]; 5] {
    let two_ell_sq = R::from_int(2) * p.ell.clone() * p.ell.clone();
    // dOmega/dx^nu = Omega^2 eta_nu_lam x^lam / (2 l^2).
    let d_omega: [R; 4] = std::array::from_fn(|nu| {
        let lowered = if eta_minkowski(nu as u8) == 1 {
            p.x[nu].clone()
        } else {
            -p.x[nu].clone()
        };
        p.omega.clone() * p.omega.clone() * lowered / two_ell_sq.clone()
    });
    let mut jac: [[R; 4]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| R::zero()));
    // Chart directions: X^mu = Omega x^mu sits at bulk position of label mu.
    let bulk_pos_of_mu = [4usize, 0, 1, 2]; // labels 0,1,2,3 -> positions
    for mu in 0..4 {
        for nu in 0..4 {
            let mut v = p.x[mu].clone() * d_omega[nu].clone();
            if mu == nu {
                v = v + p.omega.clone();
            }
            jac[bulk_pos_of_mu[mu]][nu] = v;
        }
    }
    // X^4 = -l Omega (1+u) = l (1 - 2 Omega), so dX^4/dx^nu = -2 l dOmega.
    for nu in 0..4 {
        jac[3][nu] = -(R::from_int(2) * p.ell.clone() * d_omega[nu].clone());
    }
    jac
}

/// Pullback metric `g_mn = -J^A_m eta_AB J^B_n`; equals `Omega^2 eta`.
pub fn induced_metric<R: FieldScalar + NumericScalar>(p: &ChartPoint<R>) -> [[R; 4]; 4] {
    let jac = embedding_jacobian(p);
    std::array::from_fn(|m| {
        std::array::from_fn(|n| {
            let mut acc = R::zero();
            for a in 0..5 {
                let term = jac[a][m].clone() * jac[a][n].clone();
                acc = acc + if eta_bulk(BULK_LABELS[a]) == 1 { term } else { -term };
            }
            -acc
        })
    })
}

/// Largest relative deviation of the pullback metric from `Omega^2 eta`.
pub fn conformal_flatness_residual(p: &ChartPoint<f64>) -> f64 {
    let g = induced_metric(p);
    let scale = p.omega * p.omega;
    let mut worst: f64 = 0.0;
    for m in 0..4 {
        for n in 0..4 {
            let expect = if m == n { scale * eta_minkowski(m as u8) as f64 } else { 0.0 };
            worst = worst.max((g[m][n] - expect).abs() / scale.abs());
        }
    }
    worst
}

// ---------------------------------------------------------------------------
// Killing fields.
// ---------------------------------------------------------------------------

/// Polynomial vector field on the bulk: five components over (X^1..X^4,X^0).
pub type PolyVectorField = [Poly<BigRational, 5>; 5];

/// The rotation generator field in the A-B coordinate plane:
/// `xi_AB = eta_AC X^C d/dX^B - eta_BC X^C d/dX^A`.
pub fn killing_field(a: u8, b: u8) -> PolyVectorField {
    assert_ne!(a, b, "killing field needs distinct labels");
    let pos = |l: u8| crate::signature::bulk().position_of(l).unwrap();
    let lowered = |l: u8| {
        let v = Poly::<BigRational, 5>::var(pos(l));
        if eta_bulk(l) == 1 {
            v
        } else {
            -v
        }
    };
    let mut field: PolyVectorField = std::array::from_fn(|_| Poly::zero());
    field[pos(b)] = field[pos(b)].clone() + lowered(a);
    field[pos(a)] = field[pos(a)].clone() - lowered(b);
    field
}

/// Lie bracket of polynomial vector fields, `[v, w]^C = v^D d_D w^C - w^D d_D v^C`.
pub fn field_bracket(v: &PolyVectorField, w: &PolyVectorField) -> PolyVectorField {
    std::array::from_fn(|c| {
        let mut acc = Poly::zero();
        for d in 0..5 {
            acc = acc + v[d].clone() * w[c].partial(d) - w[d].clone() * v[c].partial(d);
        }
        acc
    })
}

/// Symmetrized derivative of the lowered field; identically zero exactly
/// when the field is Killing for the flat bulk metric.
pub fn killing_equation_residual(field: &PolyVectorField) -> [[Poly<BigRational, 5>; 5]; 5] {
    let lowered: [Poly<BigRational, 5>; 5] = std::array::from_fn(|c| {
        if eta_bulk(BULK_LABELS[c]) == 1 {
            field[c].clone()
        } else {
            -field[c].clone()
        }
    });
    std::array::from_fn(|a| {
        std::array::from_fn(|b| lowered[b].partial(a) + lowered[a].partial(b))
    })
}

/// Directional derivative of the pseudo-sphere polynomial along the field;
/// zero means the field is tangent to every pseudo-sphere.
pub fn tangency_residual(field: &PolyVectorField) -> Poly<BigRational, 5> {
    // Q = X.X (the constant -l^2 differentiates away).
    let mut q = Poly::<BigRational, 5>::zero();
    for i in 0..5 {
        let v = Poly::<BigRational, 5>::var(i);
        let sq = v.clone() * v;
        q = q + if eta_bulk(BULK_LABELS[i]) == 1 { sq } else { -sq };
    }
    let mut acc = Poly::zero();
    for d in 0..5 {
        acc = acc + field[d].clone() * q.partial(d);
    }
    acc
}

/// Structure constants of the Killing bracket table, expanded over the ten
/// generator fields (each has disjoint monomial support, so expansion is
/// coefficient extraction followed by an exactness assertion).
pub fn killing_structure_table() -> crate::algebras::StructureTable {
    let pairs = crate::algebras::generator_pairs();
    let gens: Vec<PolyVectorField> = pairs.iter().map(|&(a, b)| killing_field(a, b)).collect();
    gens.iter()
        .map(|p| {
            gens.iter()
                .map(|q| {
                    let bracket = field_bracket(p, q);
                    expand_in_killing_basis(&bracket, &gens)
                })
                .collect()
        })
        .collect()
}

fn expand_in_killing_basis(
    bracket: &PolyVectorField,
    gens: &[PolyVectorField],
) -> Vec<BigRational> {
    use num::traits::Zero;
    let coeffs: Vec<BigRational> = gens
        .iter()
        .map(|g| {
            let (comp, exps, lead) = lead_monomial(g);
            let mut num = BigRational::zero();
            for (e, c) in bracket[comp].terms() {
                if *e == exps {
                    num = c.clone();
                }
            }
            num / lead
        })
        .collect();
    let mut recon: PolyVectorField = std::array::from_fn(|_| Poly::zero());
    for (c, g) in coeffs.iter().zip(gens) {
        for comp in 0..5 {
            recon[comp] = recon[comp].clone() + g[comp].clone() * Poly::constant(c.clone());
        }
    }
    for comp in 0..5 {
        assert!(
            (recon[comp].clone() - bracket[comp].clone()).is_zero(),
            "bracket outside the generator span"
        );
    }
    coeffs
}

fn lead_monomial(g: &PolyVectorField) -> (usize, [u8; 5], BigRational) {
    for (comp, p) in g.iter().enumerate() {
        if let Some((e, c)) = p.terms().next() {
            return (comp, *e, c.clone());
        }
    }
    panic!("zero field");
}

// ---------------------------------------------------------------------------
// Chart grid CSV (observer-region data for external plotting).
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    Inside,
    Absolute,
    Outside,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Inside => "inside",
            Region::Absolute => "absolute",
            Region::Outside => "outside",
        }
    }
}

/// Classifies a (t, x1) point against the absolute `t^2 - x^2 = 4 l^2`.
pub fn classify(t: f64, x1: f64, ell: f64) -> Region {
    let q = t * t - x1 * x1;
    let bound = 4.0 * ell * ell;
    if (q - bound).abs() <= 1e-12 * bound {
        Region::Absolute
    } else if q < bound {
        Region::Inside
    } else {
        Region::Outside
    }
}

/// Emits the (t, x1) grid as CSV with header `t,x1,region`. With
/// `lightlike`, appends points sampled along null lines `t = +-x1 + c`
/// for a few offsets, tagged with their own region.
pub fn emit_chart_grid(ell: f64, extent: f64, resolution: usize, lightlike: bool) -> String {
    assert!(resolution >= 2, "resolution must be at least 2");
    let mut out = String::from("t,x1,region\n");
    let step = 2.0 * extent / (resolution - 1) as f64;
    for i in 0..resolution {
        let t = -extent + step * i as f64;
        for j in 0..resolution {
            let x1 = -extent + step * j as f64;
            out.push_str(&format!("{t},{x1},{}\n", classify(t, x1, ell).as_str()));
        }
    }
    if lightlike {
        for c in [-ell, 0.0, ell] {
            for sign in [1.0, -1.0] {
                for i in 0..resolution {
                    let x1 = -extent + step * i as f64;
                    let t = sign * x1 + c;
                    if t.abs() <= extent {
                        out.push_str(&format!("{t},{x1},{}\n", classify(t, x1, ell).as_str()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn origin_embeds_to_the_south_pole() {
        let p = embed(&[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)], &rat(1, 1)).unwrap();
        assert_eq!(p.omega, rat(1, 1));
        assert_eq!(p.bulk, [rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 1), rat(0, 1)]);
        assert!(pseudo_sphere_residual(&p.bulk, &p.ell).is_zero());
    }

    #[test]
    fn absolute_points_are_rejected() {
        // sigma^2 = t^2 - x^2 = 4 l^2 exactly.
        let err = embed(&[rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)], &rat(1, 1));
        assert!(matches!(err, Err(Error::OnAbsolute)));
    }

    #[test]
    fn unembed_rejects_the_north_pole() {
        let north = [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)];
        assert!(matches!(unembed(&north, &rat(1, 1)), Err(Error::NorthPole)));
    }

    #[test]
    fn chart_roundtrip_is_exact_in_rational_arithmetic() {
        let x = [rat(1, 3), rat(-2, 7), rat(1, 2), rat(3, 5)];
        for ell in [rat(1, 1), rat(10, 1)] {
            let p = embed(&x, &ell).unwrap();
            assert!(pseudo_sphere_residual(&p.bulk, &ell).is_zero());
            assert_eq!(unembed(&p.bulk, &ell).unwrap(), x);
        }
    }

    #[test]
    fn metric_is_conformally_flat_exactly() {
        let x = [rat(1, 2), rat(-1, 3), rat(2, 5), rat(0, 1)];
        let p = embed(&x, &rat(1, 1)).unwrap();
        let g = induced_metric(&p);
        let omega_sq = p.omega.clone() * p.omega.clone();
        for m in 0..4 {
            for n in 0..4 {
                let expect = if m == n {
                    omega_sq.clone() * rat(eta_minkowski(m as u8), 1)
                } else {
                    rat(0, 1)
                };
                assert_eq!(g[m][n], expect, "entry ({m},{n})");
            }
        }
    }

    #[test]
    fn metric_at_origin_is_minkowski() {
        let p = embed(&[0.0, 0.0, 0.0, 0.0], &1.0).unwrap();
        let g = induced_metric(&p);
        for m in 0..4 {
            for n in 0..4 {
                let expect = if m == n { eta_minkowski(m as u8) as f64 } else { 0.0 };
                assert!((g[m][n] - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn radius_rescaling_tracks_omega() {
        let x = [rat(1, 2), rat(1, 3), rat(0, 1), rat(-1, 4)];
        let p1 = embed(&x, &rat(1, 1)).unwrap();
        let p2 = embed(&x, &rat(2, 1)).unwrap();
        assert!(p1.omega != p2.omega);
        assert!(pseudo_sphere_residual(&p2.bulk, &rat(2, 1)).is_zero());
        assert_eq!(induced_metric(&p2)[0][0], p2.omega.clone() * p2.omega.clone());
    }

    #[test]
    fn killing_fields_are_killing_and_tangent() {
        for (a, b) in crate::algebras::generator_pairs() {
            let xi = killing_field(a, b);
            for row in killing_equation_residual(&xi) {
                for entry in row {
                    assert!(entry.is_zero(), "killing equation fails for ({a},{b})");
                }
            }
            assert!(tangency_residual(&xi).is_zero(), "tangency fails for ({a},{b})");
        }
    }

    #[test]
    fn killing_bracket_spot_value() {
        // [xi_12, xi_23] = eta_22 xi_13 as polynomials.
        let b = field_bracket(&killing_field(1, 2), &killing_field(2, 3));
        let expect = killing_field(1, 3);
        for c in 0..5 {
            assert_eq!(b[c], expect[c], "component {c}");
        }
        // [xi_12, xi_12] = 0.
        let z = field_bracket(&killing_field(1, 2), &killing_field(1, 2));
        assert!(z.iter().all(|p| p.is_zero()));
    }

    #[test]
    fn killing_table_matches_the_bivector_table() {
        assert_eq!(
            killing_structure_table(),
            crate::algebras::eta_combination_constants(-1)
        );
    }

    #[test]
    fn lightlike_rows_extend_the_grid() {
        let base = emit_chart_grid(1.0, 2.0, 3, false);
        let extended = emit_chart_grid(1.0, 2.0, 3, true);
        assert!(extended.lines().count() > base.lines().count());
        // Every appended point lies on one of the sampled null lines.
        for line in extended.lines().skip(base.lines().count()) {
            let mut parts = line.split(',');
            let t: f64 = parts.next().unwrap().parse().unwrap();
            let x1: f64 = parts.next().unwrap().parse().unwrap();
            let on_null = [-1.0, 0.0, 1.0].iter().any(|c| {
                ((t - x1 - c).abs() < 1e-12) || ((t + x1 - c).abs() < 1e-12)
            });
            assert!(on_null, "({t},{x1}) off the sampled null lines");
        }
    }

    #[test]
    fn grid_flags_match_direct_evaluation() {
        let csv = emit_chart_grid(1.0, 3.0, 3, false);
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 9);
        assert!(csv.contains("0,0,inside"));
        // (t, x1) = (2l, 0) sits on the absolute.
        assert_eq!(classify(2.0, 0.0, 1.0), Region::Absolute);
        assert_eq!(classify(0.0, 0.0, 1.0), Region::Inside);
        assert_eq!(classify(3.0, 0.0, 1.0), Region::Outside);
    }
}
