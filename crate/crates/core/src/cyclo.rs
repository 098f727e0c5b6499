//! Exact arithmetic in the cyclotomic fields Q(ζ_e), with elements held in
//! the canonical residue basis 1, ζ, …, ζ^{φ(e)−1} of Q[x]/Φ_e(x). Equality
//! of values is equality of coefficient vectors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

struct Ctx {
    #[allow(dead_code)]
    e: u32,
    phi: usize,
    /// pows[j] = integer coefficient vector of x^j mod Φ_e, for 0 ≤ j < e
    /// (and at least 2φ−1 rows for products).
    pows: Vec<Vec<BigInt>>,
}

fn ctxs() -> &'static Mutex<HashMap<u32, Arc<Ctx>>> {
    static CTXS: OnceLock<Mutex<HashMap<u32, Arc<Ctx>>>> = OnceLock::new();
    CTXS.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ctx(e: u32) -> Arc<Ctx> {
    let mut map = ctxs().lock().unwrap();
    if let Some(c) = map.get(&e) {
        return c.clone();
    }
    let c = Arc::new(build_ctx(e));
    map.insert(e, c.clone());
    c
}

/// Φ_n for every divisor n | e, by exact division of x^n − 1.
fn cyclotomic_polys(e: u64) -> HashMap<u64, Vec<BigInt>> {
    let mut phi_of: HashMap<u64, Vec<BigInt>> = HashMap::new();
    let mut divisors: Vec<u64> = (1..=e).filter(|d| e % d == 0).collect();
    divisors.sort_unstable();
    for n in divisors {
        // x^n − 1
        let mut poly = vec![BigInt::zero(); n as usize + 1];
        poly[0] = -BigInt::one();
        poly[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                poly = poly_div_exact(&poly, &phi_of[&d]);
            }
        }
        phi_of.insert(n, poly);
    }
    phi_of
}

/// Exact division of integer polynomials (monic divisor).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + dn].clone();
        if !lead.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= &lead * dj;
            }
        }
        quot[i] = lead;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "non-exact poly division");
    quot
}

fn build_ctx(e: u32) -> Ctx {
    assert!(e >= 1);
    let phi = euler_phi(e as u64) as usize;
    let polys = cyclotomic_polys(e as u64);
    let phi_poly = &polys[&(e as u64)];
    debug_assert_eq!(phi_poly.len(), phi + 1);
    let rows = (e as usize).max(2 * phi);
    let mut pows: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for j in 0..phi.min(rows) {
        let mut row = vec![BigInt::zero(); phi];
        row[j] = BigInt::one();
        pows.push(row);
    }
    // x^{j+1} = shift(x^j), reducing the overflow coefficient through
    // x^φ = −(c_0 + … + c_{φ−1} x^{φ−1}).
    while pows.len() < rows {
        let last = pows.last().unwrap();
        let carry = last[phi - 1].clone();
        let mut row = vec![BigInt::zero(); phi];
        for i in 1..phi {
            row[i] = last[i - 1].clone();
        }
        if !carry.is_zero() {
            for i in 0..phi {
                row[i] -= &carry * &phi_poly[i];
            }
        }
        pows.push(row);
    }
    Ctx { e, phi, pows }
}

/// An exact element of Q(ζ_e).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyc {
    #[allow(dead_code)]
    e: u32,
    c: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(e: u32) -> Self {
        Cyc {
            e,
            c: vec![BigRational::zero(); euler_phi(e as u64) as usize],
        }
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(e: u32, r: BigRational) -> Self {
        let mut v = Self::zero(e);
        v.c[0] = r;
        v
    }

    /// ζ_e^k.
    pub fn zeta(e: u32, k: i64) -> Self {
        let cx = ctx(e);
        let k = k.rem_euclid(e as i64) as usize;
        let c = cx.pows[k]
            .iter()
            .map(|b| BigRational::from_integer(b.clone()))
            .collect();
        Cyc { e, c }
    }

    /// ζ_r^s + ζ_r^{−s}, embedded at conductor e (requires r | e).
    pub fn nu(e: u32, r: u32, s: i64) -> Self {
        assert_eq!(e % r, 0, "nu requires r | e");
        let m = (e / r) as i64;
        Self::zeta(e, s * m).add(&Self::zeta(e, -s * m))
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.e, other.e, "conductor mismatch; embed first");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect();
        Cyc { e: self.e, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        let c = self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect();
        Cyc { e: self.e, c }
    }

    pub fn neg(&self) -> Self {
        Cyc {
            e: self.e,
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyc {
            e: self.e,
            c: self.c.iter().map(|a| a * r).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        let cx = ctx(self.e);
        let phi = cx.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut c = vec![BigRational::zero(); phi];
        for (deg, coeff) in prod.into_iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if deg < phi {
                c[deg] += coeff;
            } else {
                for (i, r) in cx.pows[deg].iter().enumerate() {
                    if !r.is_zero() {
                        c[i] += &coeff * &BigRational::from_integer(r.clone());
                    }
                }
            }
        }
        Cyc { e: self.e, c }
    }

    /// Galois automorphism ζ ↦ ζ^t, gcd(t, e) = 1.
    pub fn galois(&self, t: u64) -> Self {
        let e = self.e as u64;
        assert_eq!(
            num::integer::gcd(t, e),
            1,
            "galois exponent must be coprime"
        );
        let cx = ctx(self.e);
        let mut c = vec![BigRational::zero(); cx.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let j = ((i as u64) * t % e) as usize;
            for (k, r) in cx.pows[j].iter().enumerate() {
                if !r.is_zero() {
                    c[k] += a * &BigRational::from_integer(r.clone());
                }
            }
        }
        Cyc { e: self.e, c }
    }

    /// Complex conjugation ζ ↦ ζ^{−1}.
    pub fn conj(&self) -> Self {
        if self.e <= 2 {
            return self.clone();
        }
        self.galois(self.e as u64 - 1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Lossless embedding into Q(ζ_to), to a multiple of the conductor.
    pub fn embed(&self, to: u32) -> Self {
        assert_eq!(to % self.e, 0, "embedding requires a conductor multiple");
        if to == self.e {
            return self.clone();
        }
        let m = (to / self.e) as usize;
        let cx = ctx(to);
        let mut c = vec![BigRational::zero(); cx.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, r) in cx.pows[i * m].iter().enumerate() {
                if !r.is_zero() {
                    c[k] += a * &BigRational::from_integer(r.clone());
                }
            }
        }
        Cyc { e: to, c }
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Numeric approximation (re, im).
    pub fn to_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let x = a.to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * i as f64 / self.e as f64;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// Exact expression over the power basis, e.g. `1/2+1/2*E5^1-E5^3`.
    pub fn fmt_exact(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = if a.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if a.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            let coeff = if mag.is_one() && i > 0 {
                String::new()
            } else {
                format!("{mag}")
            };
            if i == 0 {
                out.push_str(&format!("{mag}"));
            } else if coeff.is_empty() {
                out.push_str(&format!("E{}^{}", self.e, i));
            } else {
                out.push_str(&format!("{coeff}*E{}^{}", self.e, i));
            }
        }
        out
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_exact())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_exact())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        // 1 + ζ5 + ζ5² + ζ5³ + ζ5⁴ = 0
        let mut s = Cyc::zero(5);
        for k in 0..5 {
            s = s.add(&Cyc::zeta(5, k));
        }
        assert!(s.is_zero());
        // ζ6 = −ζ3²  (both primitive sixth-root identities hold exactly)
        let z6 = Cyc::zeta(6, 1);
        assert_eq!(z6.mul(&z6).mul(&z6), Cyc::from_int(6, -1));
    }

    #[test]
    fn golden_ratio_entry() {
        // −(ζ5² + ζ5³) = (1+√5)/2: verify it satisfies x² = x + 1.
        let x = Cyc::zeta(5, 2).add(&Cyc::zeta(5, 3)).neg();
        assert_eq!(x.mul(&x), x.add(&Cyc::one(5)));
        assert!(x.is_real());
        let (re, im) = x.to_f64();
        assert!((re - 1.618033988749895).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        let a = Cyc::zeta(12, 1).add(&Cyc::from_int(12, 2));
        let b = Cyc::zeta(12, 7).scale_int(3).sub(&Cyc::zeta(12, 2));
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn embedding_is_lossless() {
        let a = Cyc::zeta(5, 1).add(&Cyc::from_int(5, 1));
        let b = a.embed(60);
        assert_eq!(b.as_rational(), None);
        // ζ5 at conductor 60 is ζ60^12.
        assert_eq!(b, Cyc::zeta(60, 12).add(&Cyc::one(60)));
        let sq_small = a.mul(&a).embed(60);
        assert_eq!(sq_small, b.mul(&b));
    }

    #[test]
    fn rational_detection() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = Cyc::from_rational(12, half.clone());
        assert_eq!(a.as_rational(), Some(half));
        assert_eq!(Cyc::from_int(7, 3).as_integer(), Some(BigInt::from(3)));
        assert_eq!(Cyc::zeta(7, 1).as_rational(), None);
    }

    #[test]
    fn nu_values() {
        // ν₃¹ = ζ3 + ζ3² = −1
        assert_eq!(Cyc::nu(3, 3, 1), Cyc::from_int(3, -1));
        // ν₅¹ at conductor 5: 2cos(72°) = (√5−1)/2 ≈ 0.618
        let (re, _) = Cyc::nu(5, 5, 1).to_f64();
        assert!((re - 0.6180339887498949).abs() < 1e-12);
    }
}
