//! Small finite fields F_q, q = p^k ≤ 32, with exact table-driven arithmetic.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub const MAX_Q: u64 = 32;

/// F_q with elements indexed 0..q−1; index Σ cᵢ pⁱ encodes the polynomial
/// Σ cᵢ xⁱ over F_p modulo the stored irreducible.
pub struct FqField {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    /// Modulus coefficients c₀..c_k (monic, c_k = 1); the lexicographically
    /// least irreducible when encoded as a base-p integer.
    pub modulus: Vec<u64>,
    /// Generator of the multiplicative group, of order q−1.
    pub nu: u64,
    add: Vec<u64>,
    mul: Vec<u64>,
    neg: Vec<u64>,
    inv: Vec<u64>,
}

impl FqField {
    pub fn new(p: u64, k: u32) -> Result<FqField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_Q && k >= 1);
        let q = q.ok_or(Error::DegreeTooLarge {
            q: p.saturating_pow(k),
        })?;
        let modulus = least_irreducible(p, k);
        let mut f = FqField {
            p,
            k,
            q,
            modulus,
            nu: 0,
            add: vec![0; (q * q) as usize],
            mul: vec![0; (q * q) as usize],
            neg: vec![0; q as usize],
            inv: vec![0; q as usize],
        };
        for a in 0..q {
            for b in 0..q {
                f.add[(a * q + b) as usize] = poly_add(p, k, a, b);
                f.mul[(a * q + b) as usize] = poly_mul_mod(p, k, &f.modulus, a, b);
            }
        }
        for a in 0..q {
            f.neg[a as usize] = (0..q).find(|&b| f.add[(a * q + b) as usize] == 0).unwrap();
            if a != 0 {
                f.inv[a as usize] = (1..q)
                    .find(|&b| f.mul[(a * q + b) as usize] == 1)
                    .expect("field inverse");
            }
        }
        f.nu = (1..q)
            .find(|&a| f.elem_order(a) == q - 1)
            .expect("multiplicative group of a finite field is cyclic");
        Ok(f)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: u64) -> u64 {
        assert!(a != 0);
        let mut x = a;
        let mut o = 1;
        while x != 1 {
            x = self.mul(x, a);
            o += 1;
        }
        o
    }
}

fn poly_add(p: u64, k: u32, a: u64, b: u64) -> u64 {
    let mut out = 0;
    let mut mult = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..k {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    out
}

/// Multiplies two degree-<k polynomials encoded base p and reduces modulo the
/// monic irreducible `modulus`.
fn poly_mul_mod(p: u64, k: u32, modulus: &[u64], a: u64, b: u64) -> u64 {
    let k = k as usize;
    let mut coeffs = vec![0u64; 2 * k];
    let to_vec = |mut x: u64| {
        let mut v = vec![0u64; k];
        for c in v.iter_mut() {
            *c = x % p;
            x /= p;
        }
        v
    };
    let av = to_vec(a);
    let bv = to_vec(b);
    for i in 0..k {
        for j in 0..k {
            coeffs[i + j] = (coeffs[i + j] + av[i] * bv[j]) % p;
        }
    }
    // Reduce: x^k = -(c₀ + c₁x + ... + c_{k-1}x^{k-1})
    for deg in (k..2 * k).rev() {
        let c = coeffs[deg];
        if c == 0 {
            continue;
        }
        coeffs[deg] = 0;
        for i in 0..k {
            let sub = (c * modulus[i]) % p;
            coeffs[deg - k + i] = (coeffs[deg - k + i] + p - sub) % p;
        }
    }
    let mut out = 0;
    let mut mult = 1;
    for &c in coeffs.iter().take(k) {
        out += c * mult;
        mult *= p;
    }
    out
}

/// Least monic irreducible of degree k over F_p, encoded base p (coefficients
/// c₀..c_k with c_k = 1); least in the base-p integer encoding.
fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    if k == 1 {
        return vec![0, 1]; // x
    }
    let lower: u64 = p.pow(k as u32);
    'cand: for enc in 0..lower {
        let mut coeffs = vec![0u64; k + 1];
        let mut x = enc;
        for c in coeffs.iter_mut().take(k) {
            *c = x % p;
            x /= p;
        }
        coeffs[k] = 1;
        // Irreducible over F_p iff no root for k ≤ 3; for k ≥ 4 also exclude
        // factors of degree ≥ 2 by trial division.
        for r in 0..p {
            if poly_eval(p, &coeffs, r) == 0 {
                continue 'cand;
            }
        }
        if k >= 4 {
            for d in 2..=k / 2 {
                for denc in 0..p.pow(d as u32) {
                    let mut div = vec![0u64; d + 1];
                    let mut y = denc;
                    for c in div.iter_mut().take(d) {
                        *c = y % p;
                        y /= p;
                    }
                    div[d] = 1;
                    if poly_divides(p, &div, &coeffs) {
                        continue 'cand;
                    }
                }
            }
        }
        return coeffs;
    }
    unreachable!("irreducible polynomials of every degree exist");
}

fn poly_eval(p: u64, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

fn poly_divides(p: u64, div: &[u64], target: &[u64]) -> bool {
    let mut rem: Vec<u64> = target.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - d;
            for i in 0..=d {
                let sub = (lead * div[i]) % p;
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
        }
        rem.pop();
        while rem.len() > d && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}
