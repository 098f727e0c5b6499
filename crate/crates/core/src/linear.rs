//! SL(2,q) and GL(2,q) as permutation groups on the nonzero column vectors,
//! together with the standard named elements 1, z, c, d, a, b.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{is_prime, FqField, MAX_Q};
use crate::group::Group;
use crate::perm::Permutation;

/// 2×2 matrix over F_q, entries as field element indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    pub fn det(&self, f: &FqField) -> u64 {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn mul(&self, other: &Mat2, f: &FqField) -> Mat2 {
        Mat2 {
            a: f.add(f.mul(self.a, other.a), f.mul(self.b, other.c)),
            b: f.add(f.mul(self.a, other.b), f.mul(self.b, other.d)),
            c: f.add(f.mul(self.c, other.a), f.mul(self.d, other.c)),
            d: f.add(f.mul(self.c, other.b), f.mul(self.d, other.d)),
        }
    }

    pub fn order(&self, f: &FqField) -> u64 {
        let mut x = *self;
        let mut o = 1;
        while x != Mat2::identity() {
            x = x.mul(self, f);
            o += 1;
        }
        o
    }

    /// Permutation of the q²−1 nonzero column vectors (v ↦ Mv).
    pub fn to_permutation(&self, f: &FqField) -> Result<Permutation> {
        let q = f.q;
        let idx = |x: u64, y: u64| (x * q + y - 1) as usize;
        let mut images = vec![0u16; (q * q - 1) as usize];
        for x in 0..q {
            for y in 0..q {
                if x == 0 && y == 0 {
                    continue;
                }
                let nx = f.add(f.mul(self.a, x), f.mul(self.b, y));
                let ny = f.add(f.mul(self.c, x), f.mul(self.d, y));
                images[idx(x, y)] = idx(nx, ny) as u16;
            }
        }
        Permutation::from_images(images)
    }
}

fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 || q > MAX_Q {
        return Err(Error::UnsupportedQ(q));
    }
    let p = (2..=q).find(|&p| q % p == 0).unwrap();
    if !is_prime(p) {
        return Err(Error::UnsupportedQ(q));
    }
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(Error::UnsupportedQ(q));
    }
    Ok((p, k))
}

pub fn field_for(q: u64) -> Result<FqField> {
    let (p, k) = factor_prime_power(q)?;
    FqField::new(p, k)
}

fn sl2_generators(f: &FqField) -> Vec<Mat2> {
    // Upper and lower transvections with parameters 1 and ν generate SL(2,q).
    let mut gens = vec![
        Mat2 {
            a: 1,
            b: 1,
            c: 0,
            d: 1,
        },
        Mat2 {
            a: 1,
            b: 0,
            c: 1,
            d: 1,
        },
    ];
    if f.nu != 1 {
        gens.push(Mat2 {
            a: 1,
            b: f.nu,
            c: 0,
            d: 1,
        });
        gens.push(Mat2 {
            a: 1,
            b: 0,
            c: f.nu,
            d: 1,
        });
    }
    gens
}

/// SL(2,q) acting faithfully on the q²−1 nonzero vectors.
pub fn sl2(q: u64) -> Result<Group> {
    let f = field_for(q)?;
    let gens = sl2_generators(&f)
        .iter()
        .map(|m| m.to_permutation(&f))
        .collect::<Result<Vec<_>>>()?;
    let g = Group::from_generators((q * q - 1) as usize, gens)?;
    debug_assert_eq!(g.order() as u64, q * (q * q - 1));
    Ok(g)
}

/// GL(2,q) on the same points; contains sl2(q) as a subgroup.
pub fn gl2(q: u64) -> Result<Group> {
    let f = field_for(q)?;
    let mut mats = sl2_generators(&f);
    mats.push(Mat2 {
        a: f.nu,
        b: 0,
        c: 0,
        d: 1,
    });
    let gens = mats
        .iter()
        .map(|m| m.to_permutation(&f))
        .collect::<Result<Vec<_>>>()?;
    let g = Group::from_generators((q * q - 1) as usize, gens)?;
    debug_assert_eq!(g.order() as u64, (q * q - 1) * (q * q - q));
    Ok(g)
}

/// The named elements of SL(2,q), as permutations: 1, z = −1, the two
/// transvection representatives c, d, the split torus generator a, and an
/// element b of order q+1 (least in matrix enumeration order). For even q,
/// z = 1 and d is omitted.
pub fn named_elements(q: u64) -> Result<BTreeMap<&'static str, Permutation>> {
    let f = field_for(q)?;
    let mut out = BTreeMap::new();
    let one = Mat2::identity();
    let m1 = f.neg(1);
    let z = Mat2 {
        a: m1,
        b: 0,
        c: 0,
        d: m1,
    };
    let c = Mat2 {
        a: 1,
        b: 0,
        c: 1,
        d: 1,
    };
    let a = Mat2 {
        a: f.nu,
        b: 0,
        c: 0,
        d: f.inv(f.nu),
    };
    out.insert("1", one.to_permutation(&f)?);
    out.insert("z", z.to_permutation(&f)?);
    out.insert("c", c.to_permutation(&f)?);
    out.insert("a", a.to_permutation(&f)?);
    if q % 2 == 1 {
        let d = Mat2 {
            a: 1,
            b: 0,
            c: f.nu,
            d: 1,
        };
        out.insert("d", d.to_permutation(&f)?);
        out.insert("zc", z.mul(&c, &f).to_permutation(&f)?);
        out.insert("zd", z.mul(&d, &f).to_permutation(&f)?);
    }
    let b = find_order_q_plus_1(&f).ok_or_else(|| {
        Error::InternalInconsistency(format!("no element of order {} in SL(2,{q})", q + 1))
    })?;
    out.insert("b", b.to_permutation(&f)?);
    Ok(out)
}

fn find_order_q_plus_1(f: &FqField) -> Option<Mat2> {
    let q = f.q;
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat2 { a, b, c, d };
                    if m.det(f) == 1 && m.order(f) == q + 1 {
                        return Some(m);
                    }
                }
            }
        }
    }
    None
}
