//! Leading terms of dimension formulas from Hirzebruch-Mumford
//! proportionality, and the ingredients of the obstruction inequalities.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::arith::{prime_divisors, rho, squarefree_decomposition};
use crate::exactnum::bernoulli::{bernoulli, even_bernoulli_abs_product};
use crate::exactnum::character::{
    fundamental_discriminant, gen_bernoulli, kronecker, CharacterSpec,
};
use crate::exactnum::ratio_str;
use crate::scalar::rational_pow;
use crate::{Rational, Scalar, Surd};

/// How the obstruction spaces are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    /// `b_(-2) = 2^(8m+3) - 1` and `|P| < 1`; fully rational.
    #[default]
    Bound,
    /// `P_K`, `P_N` evaluated exactly from L-values.
    Exact,
}

/// Growth factor multiplying the obstruction spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionGrowth {
    /// `E_w - 1`, the exact leading term of the sum over `nu`.
    #[default]
    ExactLeading,
    /// `E_w`, the cruder bound as displayed.
    Printed,
}

/// Reading of the Kronecker delta `delta_{1,d}` in the volume of `K_2d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaOneReading {
    /// `delta_{1,d} = 1` iff `d = 1`.
    #[default]
    DEqualsOne,
    /// `delta_{1,d} = 1` iff `d = 1 mod 4`.
    DOneModFour,
}

impl DeltaOneReading {
    pub fn delta(self, d: u64) -> u32 {
        let hit = match self {
            DeltaOneReading::DEqualsOne => d == 1,
            DeltaOneReading::DOneModFour => d % 4 == 1,
        };
        hit as u32
    }
}

/// `dim ~ coeff * k^degree`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub coeff: Surd,
    pub degree: u32,
}

impl DimensionEstimate {
    pub fn approx(&self) -> f64 {
        self.coeff.to_f64()
    }
}

/// `((w+1)/w)^n`.
pub fn e_w(w: u64, n: u32) -> Rational {
    assert!(w >= 1, "E_w needs w >= 1");
    rational_pow(
        &Rational::new(BigInt::from(w + 1), BigInt::from(w)),
        n as u64,
    )
}

/// `E_w` or `E_w - 1`, depending on `growth`.
pub fn growth_factor(w: u64, n: u32, growth: ObstructionGrowth) -> Rational {
    let e = e_w(w, n);
    match growth {
        ObstructionGrowth::ExactLeading => e - Rational::one(),
        ObstructionGrowth::Printed => e,
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn double_factorial(n: u64) -> BigInt {
    (1..=n)
        .rev()
        .step_by(2)
        .fold(BigInt::one(), |acc, k| acc * k)
}

fn int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `|B_2 B_4 ... B_{8m+2}| / (8m+2)!!`.
pub fn bernoulli_block(m: u32) -> Rational {
    let top = 8 * m as usize + 2;
    even_bernoulli_abs_product(top) / int(double_factorial(top as u64))
}

/// Leading term of `dim M_k` for the stable group of `U + mE8(-1) + <2>`,
/// even `k`; degree `8m+1`.
pub fn dim_mk_kii_leading(m: u32) -> DimensionEstimate {
    assert!(m >= 1);
    let coeff =
        Rational::two_pow(1 - 4 * m as i64) / int(factorial(8 * m as u64 + 1)) * bernoulli_block(m);
    DimensionEstimate {
        coeff: Surd::rational(coeff),
        degree: 8 * m + 1,
    }
}

/// `C_{m,d}^{k1,w}`.
pub fn c_mdkw(m: u32, d: u64, k1: u64, w: u64, reading: DeltaOneReading) -> Surd {
    assert!(m >= 1 && d >= 1 && k1 >= 1 && w >= 1);
    let n = 8 * m as u64 + 3;
    let top = 4 * m as usize + 2;
    let mut r = Rational::two_pow(4 * m as i64 + 1 + reading.delta(d) as i64) / int(factorial(n));
    r *= bernoulli_block(m);
    r *= bernoulli(top).abs() / Rational::from_i64(top as i64);
    r *= rational_pow(&Rational::from_i64(d as i64), 4 * m as u64 + 1);
    for p in prime_divisors(d) {
        r *= Rational::one() - rational_pow(&Rational::ratio(1, p as i64), top as u64);
    }
    r *= rational_pow(
        &Rational::from_integer(BigInt::from(k1) * BigInt::from(w)),
        n,
    );
    // d^(4m+3/2) = d^(4m+1) * c sqrt(s)
    let (s, c) = squarefree_decomposition(d);
    Surd::new(Rational::zero(), r * Rational::from_i64(c as i64), s).expect("square-free radicand")
}

/// Leading term of `dim M_k` for the stable group of `2U + mE8(-1) + <-2d>`,
/// in the variable `k`; degree `8m+3`.
pub fn dim_mk_k3_leading(m: u32, d: u64, reading: DeltaOneReading) -> DimensionEstimate {
    // dim M_{2 k1 w} = C |B_{8m+4}/B_{4m+2}| sqrt d with k = 2 k1 w
    let n = 8 * m + 3;
    let c = c_mdkw(m, d, 1, 1, reading);
    let ratio = (bernoulli(8 * m as usize + 4) / bernoulli(4 * m as usize + 2)).abs();
    let root = Surd::sqrt_of(d);
    let coeff = c
        .checked_mul(&root)
        .expect("same radicand")
        .scale(&(ratio * Rational::two_pow(-(n as i64))));
    DimensionEstimate { coeff, degree: n }
}

/// `delta_{0,d mod 8} - delta_{2,d mod 4}`.
pub fn h_d(d: u64) -> i32 {
    (d % 8 == 0) as i32 - (d % 4 == 2) as i32
}

/// `2^(8m+3) - 1`.
pub fn b_minus2(m: u32) -> Rational {
    Rational::two_pow(8 * m as i64 + 3) - Rational::one()
}

/// `2^h (1 + 2^-(4m+2) - 2^-(8m+3)) + 2^-(8m+3)`.
fn b_minus2d_bracket(m: u32, h: i32) -> Rational {
    let a = Rational::two_pow(-(4 * m as i64 + 2));
    let b = Rational::two_pow(-(8 * m as i64 + 3));
    Rational::two_pow(h as i64) * (Rational::one() + a - &b) + b
}

/// `b_(-2d)` as `R / sqrt(d)`; for `d = 2` the value is doubled, one
/// divisor per orbit.
pub fn b_minus2d(m: u32, d: u64) -> Result<Surd> {
    if d < 2 {
        return Err(Error::UnsupportedIndex(d));
    }
    let r = b_minus2d_root_free(m, d);
    Ok(Surd::over_sqrt_of(r, d))
}

/// `b_(-2d) * sqrt(d)`, a rational.
pub fn b_minus2d_root_free(m: u32, d: u64) -> Rational {
    let e = rho(d) as i64 + 8 * m as i64 + 3 + (d == 2) as i64;
    Rational::two_pow(e) * b_minus2d_bracket(m, h_d(d))
        / rational_pow(&Rational::from_i64(d as i64), 4 * m as u64 + 1)
}

/// A number of the form `coeff * pi^pi_power`.
#[derive(Debug, Clone, PartialEq)]
struct PiMonomial {
    coeff: Surd,
    pi_power: i64,
}

impl PiMonomial {
    fn div(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            coeff: self.coeff.checked_div(&other.coeff)?,
            pi_power: self.pi_power - other.pi_power,
        })
    }

    fn scale(&self, q: &Rational) -> Self {
        Self {
            coeff: self.coeff.scale(q),
            pi_power: self.pi_power,
        }
    }
}

/// `L(n, chi_D0)` for a fundamental discriminant `D0 > 0` (principal when
/// `D0 = 1`) and even `n`:
/// `(-1)^(1+n/2) sqrt(D0)/2 (2/D0)^n B_{n,chi}/n! pi^n`.
fn primitive_l_value(n: u32, d0: u64) -> PiMonomial {
    let chi = if d0 == 1 {
        CharacterSpec::Principal { modulus: 1 }
    } else {
        CharacterSpec::KroneckerOfD { disc: d0 as i64 }
    };
    let b = gen_bernoulli(n as usize, &chi);
    let sign = if (n / 2) % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let q =
        sign * Rational::ratio(1, 2) * rational_pow(&Rational::ratio(2, d0 as i64), n as u64) * b
            / int(factorial(n as u64));
    PiMonomial {
        coeff: Surd::sqrt_of(d0).scale(&q),
        pi_power: n as i64,
    }
}

/// `L(n, (D/.))` for `D = D0 c^2`, via the primitive L-value and the Euler
/// factors at primes dividing `D`.
fn kronecker_l_value(n: u32, disc: u64) -> Result<PiMonomial> {
    let (d0, _) = fundamental_discriminant(disc as i64)?;
    let d0 = d0 as u64;
    let mut l = primitive_l_value(n, d0);
    for p in prime_divisors(disc) {
        let chi_p = kronecker(d0 as i64, p as i64) as i64;
        let f = Rational::one()
            - Rational::from_i64(chi_p) * rational_pow(&Rational::ratio(1, p as i64), n as u64);
        l = l.scale(&f);
    }
    Ok(l)
}

/// `L(n, chi_{0,f}) = zeta(n) prod_{p|f} (1 - p^-n)`.
fn principal_l_value(n: u32, f: u64) -> PiMonomial {
    let mut l = primitive_l_value(n, 1);
    for p in prime_divisors(f) {
        l = l.scale(&(Rational::one() - rational_pow(&Rational::ratio(1, p as i64), n as u64)));
    }
    l
}

/// Which of the two local-density ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PFactorKind {
    /// `P_K`, character `(4d/.)`.
    K,
    /// `P_N`, character `(d/.)`, for `d = 1 mod 4`.
    N,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PFactor {
    pub value: Surd,
    /// `d = 1`: every Euler product is empty and the value is exactly 1.
    pub boundary: bool,
}

/// Largest modulus for which exact L-values are attempted.
pub const EXACT_MODULUS_LIMIT: u64 = 4_000_000;

/// `P_K(n)` or `P_N(n)` computed exactly.
pub fn p_factors_exact(n: u32, d: u64, which: PFactorKind) -> Result<PFactor> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::NonEvenWeight(n as u64));
    }
    if d == 0 {
        return Err(Error::UnsupportedIndex(d));
    }
    let modulus = match which {
        PFactorKind::K => 4 * d,
        PFactorKind::N => {
            if d % 4 != 1 {
                return Err(Error::InvalidPoint(format!(
                    "P_N needs d = 1 mod 4, got {d}"
                )));
            }
            d
        }
    };
    let (d0, _) = fundamental_discriminant(modulus as i64)?;
    if d0.unsigned_abs() > EXACT_MODULUS_LIMIT {
        return Err(Error::Overflow("exact L-value modulus"));
    }
    let ratio = kronecker_l_value(n, modulus)?.div(&principal_l_value(n, modulus))?;
    if ratio.pi_power != 0 {
        return Err(Error::PiResidue(ratio.pi_power));
    }
    let mut value = ratio.coeff;
    let pn = |p: u64| rational_pow(&Rational::ratio(1, p as i64), n as u64);
    if which == PFactorKind::K && d % 2 == 0 {
        value = value.scale(&(Rational::one() - Rational::two_pow(-(n as i64))));
    }
    for p in prime_divisors(d) {
        value = value.scale(&((Rational::one() - pn(p)) / (Rational::one() + pn(p))));
    }
    Ok(PFactor {
        value,
        boundary: d == 1,
    })
}

/// `2^(8m+3 - delta_{4,d mod 8}) P_K(4m+2) + P_N(4m+2)`, the exact
/// replacement for `b_(-2)`; the `P_N` term only when `d = 1 mod 4`.
pub fn b_minus2_exact(m: u32, d: u64) -> Result<Surd> {
    let n = 4 * m + 2;
    let pk = p_factors_exact(n, d, PFactorKind::K)?.value;
    let e = 8 * m as i64 + 3 - (d % 8 == 4) as i64;
    let mut b = pk.scale(&Rational::two_pow(e));
    if d % 4 == 1 {
        b = b.checked_add(&p_factors_exact(n, d, PFactorKind::N)?.value)?;
    }
    Ok(b)
}

/// Leading coefficient in `k1` of the obstruction sum for the unimodular
/// series with the weight `12+4m` cusp form (`w = 4m - 10`); degree `8m+2`.
pub fn obstruction_sum_unimodular_leading(m: u32) -> Result<DimensionEstimate> {
    if m < 3 {
        return Err(Error::WOutOfRange(4 * m as i64 - 10));
    }
    let w = 4 * m as u64 - 10;
    let n = 8 * m + 2;
    let mut c = Rational::two_pow(4 * m as i64 + 2) / int(factorial(n as u64)) * bernoulli_block(m);
    c *= e_w(w, n) - Rational::one();
    c *= rational_pow(&Rational::from_i64(w as i64), n as u64);
    Ok(DimensionEstimate {
        coeff: Surd::rational(c),
        degree: n,
    })
}

/// Everything entering `beta^(w)_{m,d}`, with exact values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionIngredients {
    pub m: u32,
    pub d: u64,
    pub w: u64,
    pub k1: u64,
    /// `(1 + 1/w)^(8m+3)`.
    #[serde(with = "ratio_str")]
    pub e_w: Rational,
    /// Factor actually multiplying the obstruction spaces (`E_w` or `E_w - 1`).
    #[serde(with = "ratio_str")]
    pub growth: Rational,
    pub growth_kind: ObstructionGrowth,
    pub b_minus2: Surd,
    /// Zero for `d = 1`, where no `(-2d)` divisors exist.
    pub b_minus2d: Surd,
    pub h_d: i32,
    pub c_mdkw: Surd,
    pub mode: BoundMode,
}

pub fn obstruction_ingredients(
    m: u32,
    d: u64,
    w: u64,
    k1: u64,
    mode: BoundMode,
    growth: ObstructionGrowth,
    reading: DeltaOneReading,
) -> Result<ObstructionIngredients> {
    if w == 0 || w > 8 * m as u64 + 3 {
        return Err(Error::WOutOfRange(w as i64));
    }
    if d == 0 {
        return Err(Error::UnsupportedIndex(d));
    }
    let n = 8 * m + 3;
    let b2 = match mode {
        BoundMode::Bound => Surd::rational(b_minus2(m)),
        BoundMode::Exact => b_minus2_exact(m, d)?,
    };
    let b2d = if d >= 2 {
        b_minus2d(m, d)?
    } else {
        Surd::rational(Rational::zero())
    };
    Ok(ObstructionIngredients {
        m,
        d,
        w,
        k1,
        e_w: e_w(w, n),
        growth: growth_factor(w, n, growth),
        growth_kind: growth,
        b_minus2: b2,
        b_minus2d: b2d,
        h_d: h_d(d),
        c_mdkw: c_mdkw(m, d, k1, w, reading),
        mode,
    })
}
