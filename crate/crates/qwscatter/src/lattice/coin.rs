//! Site-local 2x2 unitary coins and the (p, q, alpha, beta, gamma)
//! parametrization shared by the homogeneous background walk.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;
use std::f64::consts::TAU;

/// Construction-time unitarity tolerance.
pub const UNITARITY_TOL: f64 = 1e-10;
/// A coin with |a| below this is treated as anti-diagonal (perfect reflector).
pub const ANTI_DIAGONAL_TOL: f64 = 1e-12;

/// A 2x2 unitary coin with rows `[a b; c d]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coin {
    a: C64,
    b: C64,
    c: C64,
    d: C64,
}

impl Coin {
    /// Validates unitarity (`|| C C* - I ||_inf <= 1e-10`) and builds the coin.
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Result<Self> {
        let coin = Coin { a, b, c, d };
        let defect = coin.unitarity_defect();
        if defect > UNITARITY_TOL {
            return Err(Error::NotUnitary {
                defect,
                tol: UNITARITY_TOL,
            });
        }
        Ok(coin)
    }

    /// The identity coin (the background value outside the barrier).
    pub fn identity() -> Self {
        Coin {
            a: C64::new(1.0, 0.0),
            b: C64::new(0.0, 0.0),
            c: C64::new(0.0, 0.0),
            d: C64::new(1.0, 0.0),
        }
    }

    /// Builds the coin
    /// `[p e^{i alpha}, q e^{i beta}; -q e^{i(gamma-beta)}, p e^{i(gamma-alpha)}]`,
    /// unitary by construction.
    pub fn from_params(params: &HomogeneousParams) -> Self {
        let i = C64::i();
        Coin {
            a: params.p * (i * params.alpha).exp(),
            b: params.q * (i * params.beta).exp(),
            c: -params.q * (i * (params.gamma - params.beta)).exp(),
            d: params.p * (i * (params.gamma - params.alpha)).exp(),
        }
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    pub fn c(&self) -> C64 {
        self.c
    }

    pub fn d(&self) -> C64 {
        self.d
    }

    /// `max |(C C* - I)_{kl}|`.
    pub fn unitarity_defect(&self) -> f64 {
        let one = C64::new(1.0, 0.0);
        let g11 = self.a * self.a.conj() + self.b * self.b.conj() - one;
        let g12 = self.a * self.c.conj() + self.b * self.d.conj();
        let g21 = self.c * self.a.conj() + self.d * self.b.conj();
        let g22 = self.c * self.c.conj() + self.d * self.d.conj() - one;
        g11.norm().max(g12.norm()).max(g21.norm()).max(g22.norm())
    }

    /// True when the coin is a perfect reflector (`|a| < 1e-12`, forcing
    /// `|d| < 1e-12` by unitarity).
    pub fn is_anti_diagonal(&self) -> bool {
        self.a.norm() < ANTI_DIAGONAL_TOL
    }

    /// Applies the coin to a chirality pair `[psi_L, psi_R]`.
    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    pub fn entries(&self) -> [C64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Parameters `(p, q, alpha, beta, gamma)` of the homogeneous walk, with
/// `p in (0,1]`, `q in [0,1)`, `p^2 + q^2 = 1` and the angles in `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousParams {
    p: f64,
    q: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
}

fn wrap_angle(x: f64) -> f64 {
    let t = x.rem_euclid(TAU);
    // rem_euclid can return TAU itself when x is a tiny negative number
    if t >= TAU {
        0.0
    } else {
        t
    }
}

impl HomogeneousParams {
    pub fn new(p: f64, q: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(p > 0.0) || p > 1.0 {
            return Err(Error::InvalidParams(format!("p = {p} must lie in (0, 1]")));
        }
        if !(0.0..1.0).contains(&q) {
            return Err(Error::InvalidParams(format!("q = {q} must lie in [0, 1)")));
        }
        let defect = (p * p + q * q - 1.0).abs();
        if defect > 1e-12 {
            return Err(Error::InvalidParams(format!(
                "p^2 + q^2 deviates from 1 by {defect:.3e}"
            )));
        }
        Ok(HomogeneousParams {
            p,
            q,
            alpha: wrap_angle(alpha),
            beta: wrap_angle(beta),
            gamma: wrap_angle(gamma),
        })
    }

    /// Convenience constructor with `q = sqrt(1 - p^2)`.
    pub fn from_p(p: f64, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(p > 0.0) || p > 1.0 {
            return Err(Error::InvalidParams(format!("p = {p} must lie in (0, 1]")));
        }
        let q = (1.0 - p * p).max(0.0).sqrt();
        Self::new(p, q, alpha, beta, gamma)
    }

    /// The free walk: identity coin everywhere.
    pub fn free() -> Self {
        HomogeneousParams {
            p: 1.0,
            q: 0.0,
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The background coin these parameters describe.
    pub fn coin(&self) -> Coin {
        Coin::from_params(self)
    }
}

/// Recovers `(p, q, alpha, beta, gamma)` from a unitary coin.
///
/// Conventions: `p = |a|`, `q = |b|`, `alpha = arg a`, `beta = arg b`
/// (`beta = 0` when `q = 0`, where the form leaves it free) and
/// `gamma = arg a + arg d`. Rejects coins with `p` too small to pin the
/// phases, and guards corrupted input by checking that the rebuilt matrix
/// reproduces the coin entrywise within 1e-10.
pub fn coin_to_params(coin: &Coin) -> Result<HomogeneousParams> {
    let p = coin.a().norm();
    let q = coin.b().norm();
    if (p * p + q * q - 1.0).abs() > UNITARITY_TOL {
        return Err(Error::NotOfForm(format!(
            "|a|^2 + |b|^2 = {} is not 1",
            p * p + q * q
        )));
    }
    if p < ANTI_DIAGONAL_TOL {
        return Err(Error::NotOfForm(
            "p = |a| vanishes; the form requires p != 0".into(),
        ));
    }
    let alpha = wrap_angle(coin.a().arg());
    let beta = if q < ANTI_DIAGONAL_TOL {
        0.0
    } else {
        wrap_angle(coin.b().arg())
    };
    let gamma = wrap_angle(coin.a().arg() + coin.d().arg());
    let params = HomogeneousParams::new(p, q.min(1.0 - f64::EPSILON), alpha, beta, gamma)?;
    let rebuilt = Coin::from_params(&params);
    let defect = coin
        .entries()
        .iter()
        .zip(rebuilt.entries().iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0_f64, f64::max);
    if defect > UNITARITY_TOL {
        return Err(Error::NotOfForm(format!(
            "reconstruction defect {defect:.3e} exceeds {UNITARITY_TOL:.1e}"
        )));
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn identity_coin_is_penetrable() {
        let coin = Coin::new(re(1.0), re(0.0), re(0.0), re(1.0)).unwrap();
        assert!(!coin.is_anti_diagonal());
        assert_eq!(coin, Coin::identity());
    }

    #[test]
    fn anti_diagonal_coin_is_flagged() {
        let coin = Coin::new(re(0.0), re(1.0), re(1.0), re(0.0)).unwrap();
        assert!(coin.is_anti_diagonal());
    }

    #[test]
    fn hadamard_coin_is_unitary_and_penetrable() {
        let h = FRAC_1_SQRT_2;
        let coin = Coin::new(re(h), re(h), re(h), re(-h)).unwrap();
        assert!(!coin.is_anti_diagonal());
        assert!(coin.unitarity_defect() < 1e-15);
    }

    #[test]
    fn non_unitary_rejected() {
        let err = Coin::new(re(1.0), re(0.5), re(0.0), re(1.0)).unwrap_err();
        assert!(matches!(err, Error::NotUnitary { .. }));
    }

    #[test]
    fn params_of_identity() {
        let p = coin_to_params(&Coin::identity()).unwrap();
        assert_eq!(p.p(), 1.0);
        assert_eq!(p.q(), 0.0);
        assert_eq!(p.alpha(), 0.0);
        assert_eq!(p.beta(), 0.0);
        assert_eq!(p.gamma(), 0.0);
    }

    #[test]
    fn params_of_hadamard() {
        let h = FRAC_1_SQRT_2;
        let coin = Coin::new(re(h), re(h), re(h), re(-h)).unwrap();
        let p = coin_to_params(&coin).unwrap();
        assert!((p.p() - h).abs() < 1e-15);
        assert!((p.q() - h).abs() < 1e-15);
        assert!(p.alpha().abs() < 1e-15);
        assert!(p.beta().abs() < 1e-15);
        assert!((p.gamma() - PI).abs() < 1e-15);
    }

    #[test]
    fn params_of_reflector_rejected() {
        let coin = Coin::new(re(0.0), re(1.0), re(1.0), re(0.0)).unwrap();
        assert!(matches!(
            coin_to_params(&coin),
            Err(Error::NotOfForm(_))
        ));
    }

    #[test]
    fn params_validation() {
        assert!(HomogeneousParams::new(0.0, 1.0, 0.0, 0.0, 0.0).is_err());
        assert!(HomogeneousParams::new(0.6, 0.9, 0.0, 0.0, 0.0).is_err());
        assert!(HomogeneousParams::new(0.6, 0.8, 0.0, 0.0, 0.0).is_ok());
    }
}
