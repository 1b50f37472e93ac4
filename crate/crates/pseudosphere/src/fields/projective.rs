//! Chart-coordinate forms of the angular operators, the constrained even
//! ansatz, and the large-radius reduction to the flat first-order equation.

use num::BigRational;

use super::ops::momentum_factor;
use super::{eval_field, lift, partial_field, scale_field, ChartField, OperatorParams};
use crate::algebras::{big_gamma, e_down, e_up, eta_minkowski};
use crate::error::{Error, Result};
use crate::geometry::{embed, embedding_jacobian, sigma_squared};
use crate::multivector::Multivector;
use crate::poly::Poly;
use crate::scalar::{FieldScalar, Scalar};
use crate::signature::bulk;

/// `sigma^2 = eta_mu_nu x^mu x^nu` as a chart polynomial.
pub fn sigma_sq_poly<R: Scalar>() -> Poly<R, 4> {
    let mut acc = Poly::<R, 4>::constant(R::zero());
    for mu in 0..4u8 {
        let v = Poly::<R, 4>::var(mu as usize);
        let sq = v.clone() * v;
        acc = acc + if eta_minkowski(mu) == 1 { sq } else { -sq };
    }
    acc
}

fn x_lowered<R: Scalar>(mu: u8) -> Poly<R, 4> {
    let v = Poly::<R, 4>::var(mu as usize);
    if eta_minkowski(mu) == 1 {
        v
    } else {
        -v
    }
}

/// Pair component `L_mu_nu` in chart coordinates:
/// `(-eta_mu_lam x^lam d_nu + eta_nu_lam x^lam d_mu) phi E^2 E^1`.
pub fn chart_angular_pair<R: Scalar>(phi: &ChartField<R>, mu: u8, nu: u8) -> ChartField<R> {
    let d_mu = partial_field(phi, mu as usize);
    let d_nu = partial_field(phi, nu as usize);
    let raw = scale_field(&d_mu, &x_lowered(nu)) - scale_field(&d_nu, &x_lowered(mu));
    raw.gp(&momentum_factor())
}

/// Normal component `L_alpha_4` in chart coordinates:
/// `l d_alpha phi E^2E^1 - (1/4l)(2 eta_al x^l x^n - sigma^2 d^n_a) d_n phi E^2E^1`.
pub fn chart_angular_normal<R: FieldScalar>(
    phi: &ChartField<R>,
    alpha: u8,
    ell: &R,
) -> ChartField<R> {
    let leading = scale_field(&partial_field(phi, alpha as usize), &Poly::constant(ell.clone()));
    let quarter = (R::from_int(4) * ell.clone()).recip();
    let sigma = sigma_sq_poly::<R>();
    let mut correction: ChartField<R> = Multivector::zero(bulk());
    for nu in 0..4u8 {
        let mut coeff =
            x_lowered::<R>(alpha) * Poly::var(nu as usize) * Poly::constant(R::from_int(2));
        if nu == alpha {
            coeff = coeff - sigma.clone();
        }
        correction =
            correction + scale_field(&partial_field(phi, nu as usize), &coeff);
    }
    (leading - scale_field(&correction, &Poly::constant(quarter))).gp(&momentum_factor())
}

/// Total angular operator in chart coordinates: basis bivectors times the
/// chart component operators, tangent pairs plus normal pairs.
pub fn chart_l_total<R: FieldScalar>(phi: &ChartField<R>, ell: &R) -> ChartField<R> {
    let mut acc: ChartField<R> = Multivector::zero(bulk());
    for mu in 0..4u8 {
        for nu in (mu + 1)..4u8 {
            let bivec = lift(&e_up::<R>(mu).gp(&e_up(nu)));
            acc = acc + bivec.gp(&chart_angular_pair(phi, mu, nu));
        }
    }
    for alpha in 0..4u8 {
        let bivec = lift(&e_up::<R>(alpha).gp(&e_up(4)));
        acc = acc + bivec.gp(&chart_angular_normal(phi, alpha, ell));
    }
    acc
}

/// Chart-coordinate linear wave residual `((1/l) L - lambda) phi`.
pub fn chart_wave_residual(phi: &ChartField<f64>, params: &OperatorParams) -> Result<ChartField<f64>> {
    let lambda = params.lambda()?;
    Ok(
        scale_field(&chart_l_total(phi, &params.ell), &Poly::constant(1.0 / params.ell))
            - scale_field(phi, &Poly::constant(lambda)),
    )
}

/// Flat first-order residual `Gamma^alpha d_alpha phi Gamma^1 Gamma^2 - m phi`.
///
/// `Gamma^1 Gamma^2 = E^2 E^1`, the same right factor the momentum operator
/// carries; with this orientation the chart residual converges to the flat
/// one as the radius grows.
pub fn flat_dirac_residual<R: Scalar>(phi: &ChartField<R>, mass: R) -> ChartField<R> {
    let mut acc: ChartField<R> = Multivector::zero(bulk());
    for alpha in 0..4u8 {
        let gamma = lift(&big_gamma::<R>(alpha));
        acc = acc + gamma.gp(&partial_field(phi, alpha as usize));
    }
    acc.gp(&momentum_factor()) - scale_field(phi, &Poly::constant(mass))
}

// ---------------------------------------------------------------------------
// Cross-validation of the chart operators against the bulk ones.
// ---------------------------------------------------------------------------

/// Compares the chart-coordinate component operators against the bulk ones
/// on a bulk polynomial field at a rational chart point, with the chart-side
/// partials produced by the exact chain rule through the embedding. Returns
/// the maximal absolute defect (exactly zero when both routes agree).
pub fn chart_bulk_agreement(
    phi_bulk: &super::BulkField<BigRational>,
    x: &[BigRational; 4],
    ell: &BigRational,
) -> Result<BigRational> {
    use num::traits::Zero;
    let point = embed(x, ell)?;
    let jac = embedding_jacobian(&point);
    // Point values of the bulk partials.
    let bulk_partials: Vec<Multivector<BigRational>> =
        (0..5).map(|var| eval_field(&partial_field(phi_bulk, var), &point.bulk)).collect();
    // Chain rule: d phi/dx^nu = J^A_nu (d_A phi).
    let chart_partials: Vec<Multivector<BigRational>> = (0..4)
        .map(|nu| {
            let mut acc = Multivector::zero(bulk());
            for a in 0..5 {
                acc = acc + bulk_partials[a].scale(&jac[a][nu]);
            }
            acc
        })
        .collect();
    let k = e_up::<BigRational>(2).gp(&e_up(1));
    let x_low = |mu: u8| {
        if eta_minkowski(mu) == 1 {
            x[mu as usize].clone()
        } else {
            -x[mu as usize].clone()
        }
    };
    let mut worst = BigRational::zero();
    let mut keep_worst = |d: Multivector<BigRational>| {
        for (_, c) in d.terms() {
            let a = if c < &BigRational::zero() { -c.clone() } else { c.clone() };
            if a > worst {
                worst = a;
            }
        }
    };

    // Tangent pairs.
    for mu in 0..4u8 {
        for nu in (mu + 1)..4u8 {
            let bulk_side = eval_field(
                &super::ops::angular_op(phi_bulk, mu, nu),
                &point.bulk,
            );
            let chart_side = (chart_partials[mu as usize].scale(&x_low(nu))
                - chart_partials[nu as usize].scale(&x_low(mu)))
            .gp(&k);
            keep_worst(bulk_side - chart_side);
        }
    }
    // Normal pairs.
    let sigma = sigma_squared(x);
    let four_ell = BigRational::from_int(4) * ell.clone();
    for alpha in 0..4u8 {
        let bulk_side =
            eval_field(&super::ops::angular_op(phi_bulk, alpha, 4), &point.bulk);
        let mut chart_side = chart_partials[alpha as usize].scale(ell);
        for nu in 0..4u8 {
            let mut coeff = BigRational::from_int(2) * x_low(alpha) * x[nu as usize].clone();
            if nu == alpha {
                coeff = coeff - sigma.clone();
            }
            chart_side = chart_side
                - chart_partials[nu as usize].scale(&(coeff / four_ell.clone()));
        }
        keep_worst(bulk_side - chart_side.gp(&k));
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// Constrained even ansatz.
// ---------------------------------------------------------------------------

/// The even ansatz `phi = base + (1/l) Omega^2 E_4 E_alpha x^alpha lam(x)`
/// with a pointwise scalar factor normalized so that the four components
/// `xi^alpha = Omega^2 x^alpha lam / l` satisfy `eta_ab xi^a xi^b = 1`.
///
/// The normal part is not polynomial (it carries `Omega^2` and an inverse
/// square root), so the ansatz evaluates pointwise in float mode; sample
/// points must have `sigma^2 > 0` for the scalar factor to be real.
pub struct ConstrainedAnsatz {
    pub base: ChartField<f64>,
    pub ell: f64,
}

impl ConstrainedAnsatz {
    pub fn new(base: ChartField<f64>, ell: f64) -> Self {
        assert!(ell > 0.0);
        ConstrainedAnsatz { base, ell }
    }

    /// The scalar factor: `lam = l / (Omega^2 sqrt(sigma^2))`, the positive
    /// solution of the normalization constraint on timelike points.
    pub fn lambda_factor(&self, x: &[f64; 4]) -> Result<f64> {
        let p = embed(x, &self.ell)?;
        if p.sigma_sq <= 0.0 {
            return Err(Error::BadConfig("ansatz sample must have sigma^2 > 0".into()));
        }
        Ok(self.ell / (p.omega * p.omega * p.sigma_sq.sqrt()))
    }

    pub fn xi(&self, x: &[f64; 4]) -> Result<[f64; 4]> {
        let p = embed(x, &self.ell)?;
        let lam = self.lambda_factor(x)?;
        Ok(std::array::from_fn(|alpha| {
            p.omega * p.omega * x[alpha] * lam / self.ell
        }))
    }

    /// `eta_ab xi^a xi^b - 1`; zero by construction.
    pub fn normalization_residual(&self, x: &[f64; 4]) -> Result<f64> {
        let xi = self.xi(x)?;
        let mut acc = 0.0;
        for alpha in 0..4usize {
            acc += eta_minkowski(alpha as u8) as f64 * xi[alpha] * xi[alpha];
        }
        Ok(acc - 1.0)
    }

    /// Pointwise value `base(x) + E_4 E_alpha xi^alpha`.
    pub fn value(&self, x: &[f64; 4]) -> Result<Multivector<f64>> {
        let xi = self.xi(x)?;
        let mut normal = Multivector::zero(bulk());
        for alpha in 0..4u8 {
            normal = normal
                + e_down::<f64>(4).gp(&e_down(alpha)).scale(&xi[alpha as usize]);
        }
        Ok(eval_field(&self.base, &std::array::from_fn(|i| x[i])) + normal)
    }

    /// The normal part carries blades with the label-4 direction, so the
    /// full ansatz fails the tangency test wherever `xi` is nonzero.
    pub fn is_tangent_at(&self, x: &[f64; 4]) -> Result<bool> {
        let bit = 1u16 << bulk().position_of(4).unwrap();
        Ok(self.value(x)?.terms().all(|(m, _)| m & bit == 0))
    }
}

// ---------------------------------------------------------------------------
// Large-radius sweep.
// ---------------------------------------------------------------------------

/// Deviation table of the chart residual from the flat residual on a field
/// family, over a radius ladder.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub ells: Vec<f64>,
    /// Max deviation over fields and sample points, per radius.
    pub deviations: Vec<f64>,
    /// Least-squares slope of log D against log l.
    pub slope: f64,
    pub strictly_decreasing: bool,
}

/// For each radius: max over fields and samples of
/// `| chart_wave_residual(phi; l) - flat_dirac_residual(phi; m) |`.
pub fn limit_sweep(
    fields: &[ChartField<f64>],
    mass: f64,
    ells: &[f64],
    samples: &[[f64; 4]],
) -> Result<SweepReport> {
    if ells.len() < 3 || ells.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadRadiusLadder);
    }
    let flats: Vec<ChartField<f64>> =
        fields.iter().map(|phi| flat_dirac_residual(phi, mass)).collect();
    let mut deviations = Vec::new();
    for &ell in ells {
        let params = OperatorParams::new(ell, mass);
        let mut worst: f64 = 0.0;
        for (phi, flat) in fields.iter().zip(&flats) {
            let chart = chart_wave_residual(phi, &params)?;
            let diff = chart - flat.clone();
            for x in samples {
                worst = worst.max(eval_field(&diff, x).max_abs_coeff());
            }
        }
        deviations.push(worst);
    }
    let slope = log_log_slope(ells, &deviations);
    let strictly_decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
    Ok(SweepReport { ells: ells.to_vec(), deviations, slope, strictly_decreasing })
}

fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.max(1e-300).ln()).collect();
    let mean_x = lx.iter().sum::<f64>() / n;
    let mean_y = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let den: f64 = lx.iter().map(|x| (x - mean_x) * (x - mean_x)).sum();
    num / den
}

/// Right-multiplying the flat residual by the idempotent `(1+gamma^0)/2`
/// projects the equation onto the ideal form: the residual of the projected
/// field with no `gamma^0` mass factor. Returns the two sides on a flat
/// spacetime field (see the heuristic module for the flat operators).
pub fn idempotent_projection_sides<R: Scalar>(
    psi: &ChartField<R>,
    mass: R,
) -> (ChartField<R>, ChartField<R>) {
    use crate::algebras::{gamma, gamma_down};
    use crate::signature::minkowski;
    let e_plus = lift(
        &(Multivector::one(minkowski()) + gamma::<R>(0)).scale(&R::from_ratio(1, 2)),
    );
    let g21 = lift(&gamma_down::<R>(2).gp(&gamma_down(1)));
    let g0 = lift(&gamma::<R>(0));
    let flat_residual = |field: &ChartField<R>, with_gamma0: bool| -> ChartField<R> {
        let mut acc: ChartField<R> = Multivector::zero(minkowski());
        for alpha in 0..4u8 {
            acc = acc + lift(&gamma::<R>(alpha)).gp(&partial_field(field, alpha as usize));
        }
        let acc = acc.gp(&g21);
        let mass_term = scale_field(field, &Poly::constant(mass.clone()));
        if with_gamma0 {
            acc - mass_term.gp(&g0)
        } else {
            acc - mass_term
        }
    };
    let lhs = flat_residual(psi, true).gp(&e_plus);
    let rhs = flat_residual(&psi.gp(&e_plus), false);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn chart_scalar(p: Poly<f64, 4>) -> ChartField<f64> {
        Multivector::from_terms(bulk(), [(0u16, p)])
    }

    #[test]
    fn chart_operators_kill_constants() {
        let c: ChartField<f64> = lift(&Multivector::one(bulk()));
        assert!(chart_l_total(&c, &2.0).is_zero());
        assert!(flat_dirac_residual(&c, 0.0).is_zero());
    }

    #[test]
    fn chart_pair_component_on_a_coordinate() {
        // phi = x^1: L_mu_nu phi = (-eta_mu_lam x^lam d_nu + eta_nu_lam x^lam d_mu) phi K.
        let phi = chart_scalar(Poly::var(1));
        let out = chart_angular_pair(&phi, 1, 2);
        // d_1 phi = 1, d_2 phi = 0: L_12 phi = eta_2_lam x^lam * 0... the
        // surviving term is +eta_11-lowered: -(-x^2)*0 + (-x^2)... direct:
        // raw = x_low(2) d_1 - x_low(1) d_2 = (-x^2) * 1 - 0.
        let expect = scale_field(&momentum_factor(), &(-Poly::<f64, 4>::var(2)));
        assert!(crate::fields::field_max_abs(&(out - expect)) == 0.0);
    }

    #[test]
    fn chart_and_bulk_routes_agree_exactly() {
        // A low-degree bulk field with several blades.
        let one = lift(&Multivector::one(bulk()));
        let biv = lift(&e_up::<BigRational>(1).gp(&e_up(2)));
        let phi: super::super::BulkField<BigRational> = scale_field(
            &one,
            &(Poly::var(0) * Poly::var(4) + Poly::var(3)),
        ) + scale_field(&biv, &(Poly::var(2) * Poly::var(2)));
        let x = [rat(1, 3), rat(-1, 4), rat(2, 5), rat(1, 7)];
        let worst = chart_bulk_agreement(&phi, &x, &rat(2, 1)).unwrap();
        assert!(worst == rat(0, 1), "defect {worst}");
    }

    #[test]
    fn ansatz_normalization_and_tangency() {
        let base: ChartField<f64> = lift(&Multivector::one(bulk()));
        let ansatz = ConstrainedAnsatz::new(base, 10.0);
        let x = [1.0, 0.2, -0.3, 0.1]; // sigma^2 > 0
        assert!(ansatz.normalization_residual(&x).unwrap().abs() < 1e-12);
        assert!(!ansatz.is_tangent_at(&x).unwrap());
        // Null samples are rejected.
        let null = [1.0, 1.0, 0.0, 0.0];
        assert!(ansatz.lambda_factor(&null).is_err());
    }

    #[test]
    fn sweep_rejects_bad_ladders() {
        let fields = vec![lift(&Multivector::one(bulk()))];
        assert!(matches!(
            limit_sweep(&fields, 1.0, &[10.0, 100.0], &[[0.0; 4]]),
            Err(Error::BadRadiusLadder)
        ));
        assert!(matches!(
            limit_sweep(&fields, 1.0, &[10.0, 9.0, 100.0], &[[0.0; 4]]),
            Err(Error::BadRadiusLadder)
        ));
    }

    #[test]
    fn constant_field_with_zero_mass_has_zero_deviation() {
        let fields = vec![lift(&Multivector::one(bulk()))];
        let report =
            limit_sweep(&fields, 0.0, &[10.0, 100.0, 1000.0], &[[0.1, 0.2, 0.0, 0.0]])
                .unwrap();
        assert!(report.deviations.iter().all(|d| *d == 0.0));
    }

    #[test]
    fn deviation_decays_like_the_inverse_radius() {
        let one = lift(&Multivector::one(bulk()));
        let biv = lift(&e_up::<f64>(1).gp(&e_up(2)));
        let phi = scale_field(&one, &(Poly::var(0) * Poly::var(1)))
            + scale_field(&biv, &Poly::var(2));
        let samples = [[1.0, 0.3, -0.2, 0.4], [0.5, -0.1, 0.2, 0.0]];
        let report = limit_sweep(
            &[phi],
            1.0,
            &[10.0, 100.0, 1000.0, 10000.0],
            &samples,
        )
        .unwrap();
        assert!(report.strictly_decreasing, "{:?}", report.deviations);
        assert!(report.slope <= -0.8, "slope {}", report.slope);
    }

    #[test]
    fn idempotent_projection_is_an_operator_identity() {
        use crate::algebras::{gamma5, sigma};
        use crate::signature::minkowski;
        let psi: ChartField<BigRational> = scale_field(
            &lift(&(Multivector::one(minkowski()) + sigma::<BigRational>(2))),
            &(Poly::var(0) * Poly::var(1)),
        ) + scale_field(&lift(&gamma5::<BigRational>()), &Poly::var(3));
        let (lhs, rhs) = idempotent_projection_sides(&psi, rat(3, 2));
        assert!((lhs - rhs).is_zero());
    }
}
