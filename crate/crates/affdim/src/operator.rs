//! Assembly of the truncated weighted composition operator in the scaled
//! monomial basis e_k = (2(z - 1/2))^k.
//!
//! For a matrix A = [[a,b],[c,d]] the projective action on the first
//! coordinate of (x, 1-x) direction representatives is the Mobius map
//! phi_A(z) = ((a-b)z + b) / w_A(z) with cocycle weight
//! w_A(z) = (a+c-b-d)z + b + d. The operator sends f to
//! sum_A psi_{A,s} * (f o phi_A), where psi is an s-power of w (times a
//! determinant factor on the upper branch), and its truncated matrix has
//! column k equal to the coefficients of sum_A psi_{A,s} * u_A^k with
//! u_A = 2(phi_A - 1/2).

use crate::error::{Error, Result};
use crate::ifs::{IfsSystem, Mat2};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;
use crate::series::PowerSeries;

/// Number of boundary samples used when the closed-form image-disc margins
/// do not apply (non-positive or complex matrices).
pub const BOUNDARY_SAMPLES: usize = 256;

/// Which branch of the weight definition is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// s <= 1: psi = w^s.
    Low,
    /// s > 1: psi = w^{2-s} * det^{s-1} (determinant oriented into the right
    /// half plane).
    High,
}

impl Branch {
    pub fn for_s(s: f64) -> Branch {
        if s <= 1.0 {
            Branch::Low
        } else {
            Branch::High
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::Low => "low",
            Branch::High => "high",
        }
    }
}

/// Affine coefficients of phi_A's numerator and of w_A, rewritten in the
/// scaled coordinate x = 2(z - 1/2): numerator(x) = num0 + num1 x,
/// w(x) = den0 + den1 x.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MobiusData<T = f64> {
    pub num0: T,
    pub num1: T,
    pub den0: T,
    pub den1: T,
}

impl<T: Scalar> MobiusData<T> {
    /// Exact affine coefficients in x. Refuses matrices whose w has a zero
    /// on the closed disc (hypothesis (iii)).
    pub fn new(m: &Mat2<T>) -> Result<Self> {
        let data = Self::new_unchecked(m);
        let margin = data.omega_iii_margin();
        if margin <= 0.0 {
            return Err(Error::OmegaViolated {
                condition: "iii",
                map_index: 0,
                margin,
            });
        }
        Ok(data)
    }

    pub fn new_unchecked(m: &Mat2<T>) -> Self {
        let half = T::from_f64(0.5);
        MobiusData {
            num0: (m.a + m.b) * half,
            num1: (m.a - m.b) * half,
            den0: (m.a + m.b + m.c + m.d) * half,
            den1: (m.a + m.c - m.b - m.d) * half,
        }
    }

    /// min over the closed unit x-disc of Re w; positive iff w maps the
    /// disc strictly into the right half plane.
    pub fn omega_iii_margin(&self) -> f64 {
        self.den0.re() - self.den1.abs()
    }

    /// w evaluated at the x coordinate.
    pub fn w_at(&self, x: T) -> T {
        self.den0 + self.den1 * x
    }

    /// phi evaluated at the x coordinate, returned in the z coordinate.
    pub fn phi_at(&self, x: T) -> T {
        (self.num0 + self.num1 * x) / self.w_at(x)
    }

    /// u = 2(phi - 1/2) evaluated at the x coordinate.
    pub fn u_at(&self, x: T) -> T {
        let two = T::from_f64(2.0);
        (two * (self.num0 + self.num1 * x) - self.w_at(x)) / self.w_at(x)
    }

    /// 1 - max_{|x|=1} |u(x)|; positive iff the closure of phi(D) lies
    /// strictly inside D. Positive real matrices admit a closed form (the
    /// image disc crosses the real axis at u(1) and u(-1)); everything else
    /// is sampled on the boundary. A failed (iii) short-circuits to a
    /// violated margin, since phi is then unbounded on the disc.
    pub fn omega_ii_margin(&self, entrywise_positive_real: bool) -> f64 {
        if self.omega_iii_margin() <= 0.0 {
            return -1.0;
        }
        if entrywise_positive_real {
            let u_plus = self.u_at(T::one()).re();
            let u_minus = self.u_at(-T::one()).re();
            return 1.0 - u_plus.abs().max(u_minus.abs());
        }
        let mut max_u = 0.0f64;
        for k in 0..BOUNDARY_SAMPLES {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / BOUNDARY_SAMPLES as f64;
            // x = e^{i theta}; evaluate through real/imag parts so the real
            // instantiation works on the boundary circle too.
            let (ct, st) = (theta.cos(), theta.sin());
            let u = self.u_at_complex(ct, st);
            max_u = max_u.max(u);
        }
        1.0 - max_u
    }

    /// |u| at x = ct + i st, evaluated without requiring T to be complex.
    fn u_at_complex(&self, ct: f64, st: f64) -> f64 {
        // n = 2*num - den and d = den at x, expanded over re/im parts.
        let (n0r, n0i) = (2.0 * self.num0.re() - self.den0.re(), 2.0 * self.num0.im() - self.den0.im());
        let (n1r, n1i) = (2.0 * self.num1.re() - self.den1.re(), 2.0 * self.num1.im() - self.den1.im());
        let nr = n0r + n1r * ct - n1i * st;
        let ni = n0i + n1r * st + n1i * ct;
        let dr = self.den0.re() + self.den1.re() * ct - self.den1.im() * st;
        let di = self.den0.im() + self.den1.re() * st + self.den1.im() * ct;
        ((nr * nr + ni * ni) / (dr * dr + di * di)).sqrt()
    }

    /// The w series (affine in x) at the given truncation order.
    pub fn w_series(&self, order: usize) -> PowerSeries<T> {
        PowerSeries::affine(self.den0, self.den1, order)
    }
}

/// Determinant rotated into the right half plane, as the weight's upper
/// branch requires. Hypothesis (i) guarantees Re(det) != 0.
fn oriented_det<T: Scalar>(m: &Mat2<T>) -> Result<T> {
    let det = m.det();
    if det.re() > 0.0 {
        Ok(det)
    } else if det.re() < 0.0 {
        Ok(-det)
    } else {
        Err(Error::OmegaViolated {
            condition: "i",
            map_index: 0,
            margin: 0.0,
        })
    }
}

/// Order-N series of u_A(x) = 2(phi_A(z) - 1/2) in the x coordinate.
///
/// Built as (affine numerator) * (w series)^(-1); hypothesis (iii) keeps the
/// reciprocal's constant term away from zero, and a strictly positive (ii)
/// margin makes the coefficient-sum bound on |u| come out below 1.
pub fn phi_series<T: Scalar>(m: &Mat2<T>, order: usize) -> Result<PowerSeries<T>> {
    let data = MobiusData::new(m)?;
    let margin_ii = data.omega_ii_margin(is_positive_real(m));
    if margin_ii < 0.0 {
        return Err(Error::OmegaViolated {
            condition: "ii",
            map_index: 0,
            margin: margin_ii,
        });
    }
    let two = T::from_f64(2.0);
    let numer = PowerSeries::affine(
        two * data.num0 - data.den0,
        two * data.num1 - data.den1,
        order,
    );
    let recip = data.w_series(order).pow(-T::one())?;
    numer.mul(&recip)
}

/// The weight psi_{A,s} as an order-N series in x.
pub fn weight_series<T: Scalar>(
    m: &Mat2<T>,
    s: f64,
    branch: Branch,
    order: usize,
) -> Result<PowerSeries<T>> {
    if !(0.0..=2.0).contains(&s) {
        return Err(Error::SOutOfRange(s));
    }
    let data = MobiusData::new(m)?;
    let w = data.w_series(order);
    match branch {
        Branch::Low => w.pow(T::from_f64(s)),
        Branch::High => {
            let det = oriented_det(m)?;
            let factor = (T::from_f64(s - 1.0) * det.ln()).exp();
            Ok(w.pow(T::from_f64(2.0 - s))?.scale(factor))
        }
    }
}

/// d/ds of the weight series: log(w) * psi on the low branch and
/// (log det - log w) * psi on the high branch.
pub fn weight_series_s_derivative<T: Scalar>(
    m: &Mat2<T>,
    s: f64,
    branch: Branch,
    order: usize,
) -> Result<PowerSeries<T>> {
    let data = MobiusData::new(m)?;
    let log_w = data.w_series(order).log()?;
    let psi = weight_series(m, s, branch, order)?;
    match branch {
        Branch::Low => log_w.mul(&psi),
        Branch::High => {
            let det = oriented_det(m)?;
            let log_det = PowerSeries::constant(det.ln(), order);
            log_det.sub(&log_w)?.mul(&psi)
        }
    }
}

fn is_positive_real<T: Scalar>(m: &Mat2<T>) -> bool {
    m.entries()
        .iter()
        .all(|e| e.im() == 0.0 && e.re() > 0.0)
}

/// Order-N matrix of the weighted composition operator.
#[derive(Clone, Debug)]
pub struct TruncatedOperator<T = f64> {
    pub entries: SquareMatrix<T>,
    pub order: usize,
    pub s: f64,
    pub branch: Branch,
    /// FNV-1a digest of the source entries; identifies which family the
    /// matrix was assembled from.
    pub system_digest: u64,
}

/// FNV-1a over the bit patterns of the entries (real and imaginary parts).
pub fn digest_maps<T: Scalar>(maps: &[Mat2<T>]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: f64| {
        for byte in x.to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
    };
    for m in maps {
        for e in m.entries() {
            eat(e.re());
            eat(e.im());
        }
    }
    h
}

/// Assemble the truncated operator for an arbitrary scalar field. Column k
/// accumulates psi_A * u_A^k over generators in list order, so the result
/// is bit-deterministic.
pub fn assemble_operator_in<T: Scalar>(
    maps: &[Mat2<T>],
    s: f64,
    branch: Branch,
    order: usize,
) -> Result<TruncatedOperator<T>> {
    assemble_generic(maps, s, branch, order, weight_series)
}

/// Entrywise d/ds of the assembled matrix. The composition parts u_A^k do
/// not depend on s, so only the weight factor is differentiated.
pub fn assemble_operator_s_derivative_in<T: Scalar>(
    maps: &[Mat2<T>],
    s: f64,
    branch: Branch,
    order: usize,
) -> Result<SquareMatrix<T>> {
    Ok(assemble_generic(maps, s, branch, order, weight_series_s_derivative)?.entries)
}

fn assemble_generic<T: Scalar>(
    maps: &[Mat2<T>],
    s: f64,
    branch: Branch,
    order: usize,
    weight: fn(&Mat2<T>, f64, Branch, usize) -> Result<PowerSeries<T>>,
) -> Result<TruncatedOperator<T>> {
    if maps.is_empty() {
        return Err(Error::EmptySystem);
    }
    if !(0.0..=2.0).contains(&s) {
        return Err(Error::SOutOfRange(s));
    }
    let mut entries = SquareMatrix::zeros(order);
    for (idx, m) in maps.iter().enumerate() {
        let u = phi_series(m, order).map_err(|e| tag_map_index(e, idx))?;
        let psi = weight(m, s, branch, order).map_err(|e| tag_map_index(e, idx))?;
        // u^k by power accumulation; column k gets psi * u^k.
        let mut u_pow = PowerSeries::constant(T::one(), order);
        for col in 0..order {
            if col > 0 {
                u_pow = u_pow.mul(&u)?;
            }
            let column = psi.mul(&u_pow)?;
            for (row, &v) in column.coeffs().iter().enumerate() {
                entries.add_to(row, col, v);
            }
        }
    }
    Ok(TruncatedOperator {
        entries,
        order,
        s,
        branch,
        system_digest: digest_maps(maps),
    })
}

fn tag_map_index(e: Error, idx: usize) -> Error {
    match e {
        Error::OmegaViolated { condition, margin, .. } => Error::OmegaViolated {
            condition,
            map_index: idx,
            margin,
        },
        other => other,
    }
}

/// Real-system entry point: branch chosen from s.
pub fn assemble_operator(
    system: &IfsSystem,
    s: f64,
    order: usize,
) -> Result<TruncatedOperator<f64>> {
    assemble_operator_in(system.maps(), s, Branch::for_s(s), order)
}

/// Real-system s-derivative, same branch convention.
pub fn assemble_operator_s_derivative(
    system: &IfsSystem,
    s: f64,
    order: usize,
) -> Result<SquareMatrix<f64>> {
    assemble_operator_s_derivative_in(system.maps(), s, Branch::for_s(s), order)
}

/// Scalar evaluation of the weight psi_{A,s} at a point z of (0,1), used by
/// the cocycle and comparison diagnostics (no series needed).
pub fn weight_value_at(m: &Mat2<f64>, s: f64, z: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&s) {
        return Err(Error::SOutOfRange(s));
    }
    let data = MobiusData::new(m)?;
    let w = data.w_at(2.0 * z - 1.0);
    if w <= 0.0 {
        return Err(Error::LogDomain { re: w, im: 0.0 });
    }
    if s <= 1.0 {
        Ok(w.powf(s))
    } else {
        Ok(w.powf(2.0 - s) * m.det().abs().powf(s - 1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::Word;
    use crate::rng::XorShift64Star;
    use num_complex::Complex64;

    const EX: Mat2 = Mat2 {
        a: 2.0,
        b: 1.0,
        c: 1.0,
        d: 1.0,
    };

    #[test]
    fn mobius_identity() {
        let d = MobiusData::new(&Mat2::<f64>::identity()).unwrap();
        // w == 1 and phi(z) = z, i.e. u(x) = x.
        assert_eq!(d.w_at(0.37), 1.0);
        assert!((d.phi_at(0.0) - 0.5).abs() < 1e-15);
        assert!((d.u_at(0.37) - 0.37).abs() < 1e-15);
    }

    #[test]
    fn mobius_example_values() {
        let d = MobiusData::new(&EX).unwrap();
        // w(z) = z + 2 so at z = 1/2 (x = 0) it is 2.5; phi(1/2) = 3/5.
        assert!((d.w_at(0.0) - 2.5).abs() < 1e-15);
        assert!((d.phi_at(0.0) - 0.6).abs() < 1e-15);
    }

    #[test]
    fn mobius_scalar_map() {
        let d = MobiusData::new(&Mat2::identity().scale(1.0 / 3.0)).unwrap();
        assert!((d.w_at(0.2) - 1.0 / 3.0).abs() < 1e-15);
        assert!((d.u_at(0.2) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn mobius_refuses_bad_denominator() {
        // a+c = 0 puts a zero of w on the closed disc.
        let m = Mat2::new(1.0, 1.0, -1.0, 1.0);
        assert!(matches!(
            MobiusData::new(&m),
            Err(Error::OmegaViolated { condition: "iii", .. })
        ));
    }

    #[test]
    fn phi_series_identity_is_x() {
        let u = phi_series(&Mat2::<f64>::identity(), 8).unwrap();
        assert!((u.coeff(1) - 1.0).abs() < 1e-15);
        for k in [0usize, 2, 3, 4, 5, 6, 7] {
            assert!(u.coeff(k).abs() < 1e-15);
        }
        let u = phi_series(&Mat2::identity().scale(1.0 / 3.0), 8).unwrap();
        assert!((u.coeff(1) - 1.0).abs() < 1e-15);
        assert!(u.coeff(0).abs() < 1e-15);
    }

    #[test]
    fn phi_series_example_value() {
        let u = phi_series(&EX, 32).unwrap();
        // phi(1/2) = 3/5, so u(0) = 2(3/5 - 1/2) = 1/5.
        assert!((u.eval(0.0).unwrap() - 0.2).abs() < 1e-14);
    }

    #[test]
    fn phi_series_sup_bound_below_one() {
        for m in [
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
            EX,
        ] {
            let u = phi_series(&m, 64).unwrap();
            assert!(u.coeff_abs_sum() < 1.0, "coeff sum {}", u.coeff_abs_sum());
        }
    }

    #[test]
    fn weight_series_constant_map() {
        let psi = weight_series(&Mat2::identity().scale(1.0 / 3.0), 0.5, Branch::Low, 8).unwrap();
        assert!((psi.coeff(0) - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        for k in 1..8 {
            assert!(psi.coeff(k).abs() < 1e-16);
        }
    }

    #[test]
    fn weight_series_branches_agree_at_one() {
        let mut rng = XorShift64Star::new(12);
        for _ in 0..20 {
            let m = Mat2::new(
                rng.next_range(0.05, 0.5),
                rng.next_range(0.05, 0.5),
                rng.next_range(0.05, 0.5),
                rng.next_range(0.05, 0.5),
            );
            if m.det() == 0.0 {
                continue;
            }
            let low = weight_series(&m, 1.0, Branch::Low, 16).unwrap();
            let high = weight_series(&m, 1.0, Branch::High, 16).unwrap();
            for k in 0..16 {
                assert!((low.coeff(k) - high.coeff(k)).abs() <= 1e-13);
            }
        }
    }

    #[test]
    fn weight_series_example_value() {
        let psi = weight_series(&EX, 0.5, Branch::Low, 32).unwrap();
        assert!((psi.eval(0.0).unwrap() - 2.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn assemble_scalar_family_is_scaled_identity() {
        let third = Mat2::identity().scale(1.0 / 3.0);
        let sys = IfsSystem::new(vec![third, third]).unwrap();
        for s in [0.3, 0.9, 1.4] {
            let op = assemble_operator(&sys, s, 12).unwrap();
            let expect = 2.0 * (1.0f64 / 3.0).powf(s);
            for i in 0..12 {
                for j in 0..12 {
                    let want = if i == j { expect } else { 0.0 };
                    assert!((op.entries.get(i, j) - want).abs() < 1e-13, "({i},{j}) s={s}");
                }
            }
        }
    }

    #[test]
    fn assemble_column_zero_is_weight_sum() {
        let sys = IfsSystem::new(vec![
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
        ])
        .unwrap();
        let s = 0.7;
        let op = assemble_operator(&sys, s, 24).unwrap();
        let mut expect = PowerSeries::constant(0.0, 24);
        for m in sys.maps() {
            expect = expect
                .add(&weight_series(m, s, Branch::Low, 24).unwrap())
                .unwrap();
        }
        for row in 0..24 {
            assert!((op.entries.get(row, 0) - expect.coeff(row)).abs() < 1e-14);
        }
    }

    #[test]
    fn derivative_matrix_scalar_family() {
        let third = Mat2::identity().scale(1.0 / 3.0);
        let sys = IfsSystem::new(vec![third, third]).unwrap();
        let s = 0.8;
        let d = assemble_operator_s_derivative(&sys, s, 10).unwrap();
        let expect = 2.0 * (1.0f64 / 3.0).powf(s) * (1.0f64 / 3.0).ln();
        for i in 0..10 {
            assert!((d.get(i, i) - expect).abs() < 1e-13);
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let sys = IfsSystem::new(vec![
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
        ])
        .unwrap();
        for s in [0.5, 1.5] {
            let n = 16;
            let h = 1e-5;
            let branch = Branch::for_s(s);
            let d = assemble_operator_s_derivative_in(sys.maps(), s, branch, n).unwrap();
            let plus = assemble_operator_in(sys.maps(), s + h, branch, n).unwrap();
            let minus = assemble_operator_in(sys.maps(), s - h, branch, n).unwrap();
            let mut max_err = 0.0f64;
            let mut max_d = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let fd = (plus.entries.get(i, j) - minus.entries.get(i, j)) / (2.0 * h);
                    max_err = max_err.max((fd - d.get(i, j)).abs());
                    max_d = max_d.max(d.get(i, j).abs());
                }
            }
            assert!(max_err <= 1e-6 * max_d, "s={s}: {max_err} vs {max_d}");
        }
    }

    #[test]
    fn derivative_branch_jump_is_log_det() {
        // At s = 1 the two branch derivatives differ exactly by log|det| * psi.
        let m = Mat2::new(0.3, 0.1, 0.1, 0.2);
        let n = 12;
        let low = weight_series_s_derivative(&m, 1.0, Branch::Low, n).unwrap();
        let high = weight_series_s_derivative(&m, 1.0, Branch::High, n).unwrap();
        let psi = weight_series(&m, 1.0, Branch::Low, n).unwrap();
        let log_det = m.det().abs().ln();
        for k in 0..n {
            let diff = high.coeff(k) - low.coeff(k);
            let expect = log_det * psi.coeff(k) - 2.0 * low.coeff(k);
            assert!(
                (diff - expect).abs() < 1e-13,
                "k={k}: diff {diff} expect {expect}"
            );
        }
    }

    #[test]
    fn mobius_cocycle_on_products() {
        let sys = IfsSystem::new(vec![
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
        ])
        .unwrap();
        let mut rng = XorShift64Star::new(4);
        for _ in 0..50 {
            let len = 2 + rng.next_index(4);
            let idx: Vec<usize> = (0..len).map(|_| rng.next_index(2)).collect();
            let prod = sys
                .word_product(&Word::new(idx.clone()).unwrap())
                .unwrap();
            let dp = MobiusData::new(&prod).unwrap();
            for k in 0..20 {
                let z0 = 0.05 + 0.9 * k as f64 / 19.0;
                // Iterated composition, rightmost map applied first.
                let mut z = z0;
                for &i in idx.iter().rev() {
                    let d = MobiusData::new(&sys.maps()[i]).unwrap();
                    z = d.phi_at(2.0 * z - 1.0);
                }
                let direct = dp.phi_at(2.0 * z0 - 1.0);
                assert!((z - direct).abs() <= 1e-12, "word {idx:?} z0={z0}");
            }
        }
    }

    #[test]
    fn weight_cocycle_on_products() {
        let sys = IfsSystem::new(vec![
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
        ])
        .unwrap();
        let mut rng = XorShift64Star::new(9);
        for _ in 0..50 {
            let len = 2 + rng.next_index(4);
            let idx: Vec<usize> = (0..len).map(|_| rng.next_index(2)).collect();
            let prod = sys
                .word_product(&Word::new(idx.clone()).unwrap())
                .unwrap();
            let dp = MobiusData::new(&prod).unwrap();
            for k in 0..20 {
                let z0 = 0.05 + 0.9 * k as f64 / 19.0;
                // Product form: w of each factor evaluated along the orbit of
                // the maps to its right.
                let mut w_prod = 1.0;
                let mut z = z0;
                for &i in idx.iter().rev() {
                    let d = MobiusData::new(&sys.maps()[i]).unwrap();
                    w_prod *= d.w_at(2.0 * z - 1.0);
                    z = d.phi_at(2.0 * z - 1.0);
                }
                let direct = dp.w_at(2.0 * z0 - 1.0);
                assert!(
                    (w_prod - direct).abs() <= 1e-10 * direct.abs().max(1.0),
                    "word {idx:?} z0={z0}: {w_prod} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn complex_embedding_assembly_is_real() {
        let sys = IfsSystem::new(vec![
            Mat2::new(0.3, 0.1, 0.1, 0.2),
            Mat2::new(0.2, 0.05, 0.15, 0.25),
        ])
        .unwrap();
        let cmaps: Vec<Mat2<Complex64>> = sys.maps().iter().map(Mat2::to_complex).collect();
        for s in [0.6, 1.3] {
            let op = assemble_operator_in(&cmaps, s, Branch::for_s(s), 24).unwrap();
            assert!(op.entries.max_abs_im() <= 1e-14);
        }
    }
}
