//! Property tests for the algebraic kernels.

use num::bigint::BigInt;
use num::rational::BigRational;
use proptest::prelude::*;

use finrep_core::cyclo::Cyc;
use finrep_core::group::Group;
use finrep_core::perm::Permutation;

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just(degree).prop_perturb(move |d, mut rng| {
        let mut images: Vec<u16> = (0..d as u16).collect();
        for i in (1..d).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

fn arb_cyc(conductor: u32) -> impl Strategy<Value = Cyc> {
    let phi = finrep_core::cyclo::euler_phi(conductor as u64) as usize;
    proptest::collection::vec(-4i64..=4, phi).prop_map(move |coeffs| {
        let mut v = Cyc::zero(conductor);
        for (k, c) in coeffs.into_iter().enumerate() {
            if c != 0 {
                v = v.add(&Cyc::zeta(conductor, k as i64).scale_int(c));
            }
        }
        v
    })
}

proptest! {
    #[test]
    fn permutation_group_axioms(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
    }

    #[test]
    fn cyclotomic_ring_axioms(a in arb_cyc(12), b in arb_cyc(12), c in arb_cyc(12)) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        // Embedding into a larger conductor respects multiplication.
        prop_assert_eq!(a.mul(&b).embed(36), a.embed(36).mul(&b.embed(36)));
    }

    #[test]
    fn cyclotomic_galois_is_multiplicative(a in arb_cyc(15), b in arb_cyc(15)) {
        for t in [2u64, 4, 7, 8, 11, 13, 14] {
            prop_assert_eq!(a.mul(&b).galois(t), a.galois(t).mul(&b.galois(t)));
        }
    }

    #[test]
    fn closure_of_random_elements_is_a_subgroup(seeds in proptest::collection::vec(0u32..24, 1..3)) {
        let g = Group::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, "(1 2 3 4)").unwrap(),
                Permutation::from_cycles(4, "(1 2)").unwrap(),
            ],
        ).unwrap();
        let h = g.closure(&seeds);
        // Closed under product and inverse, and the order divides |G|.
        for &x in &h.elems {
            prop_assert!(h.contains(g.inv(x)));
            for &y in &h.elems {
                prop_assert!(h.contains(g.mul(x, y)));
            }
        }
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn class_equation(seed in 0u32..24) {
        let g = Group::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, "(1 2 3 4)").unwrap(),
                Permutation::from_cycles(4, "(1 2)").unwrap(),
            ],
        ).unwrap();
        let cls = g.classes();
        let c = cls.class_of[seed as usize] as usize;
        let rep = g.element(seed).clone();
        prop_assert_eq!(
            g.centralizer_order(&rep).unwrap() * cls.sizes[c] as usize,
            g.order()
        );
    }

    #[test]
    fn rational_constants_embed_as_constants(n in -20i64..20, d in 1i64..9) {
        let r = BigRational::new(BigInt::from(n), BigInt::from(d));
        let v = Cyc::from_rational(30, r.clone());
        prop_assert_eq!(v.as_rational(), Some(r));
        prop_assert!(v.is_real());
    }
}

fn minor_det(rows: &[Vec<BigInt>], cols: &[usize]) -> BigInt {
    // Laplace expansion; the matrices here are at most 4×4.
    let k = rows.len();
    if k == 0 {
        return BigInt::from(1);
    }
    if k == 1 {
        return rows[0][cols[0]].clone();
    }
    let mut det = BigInt::from(0);
    let mut sign = BigInt::from(1);
    for (skip, &c) in cols.iter().enumerate() {
        let sub_rows: Vec<Vec<BigInt>> = rows[1..].to_vec();
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &cc)| cc)
            .collect();
        det += &sign * &rows[0][c] * minor_det(&sub_rows, &sub_cols);
        sign = -sign;
    }
    det
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in combinations(n, k - 1) {
            if rest.iter().all(|&r| r > first) {
                let mut v = vec![first];
                v.append(&mut rest);
                out.push(v);
            }
        }
    }
    out.retain(|v| v.len() == k);
    out
}

proptest! {
    /// The integer kernel basis spans the full kernel lattice: correct rank,
    /// genuine kernel vectors, and saturation (gcd of maximal minors 1).
    #[test]
    fn integer_kernel_basis_is_saturated(
        entries in proptest::collection::vec(-4i64..=4, 10)
    ) {
        let m: Vec<Vec<BigInt>> = entries
            .chunks(5)
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let n = 5;
        let basis = finrep_core::linalg::kernel_basis_int(&m);
        let rank = finrep_core::linalg::rank_bigint(&m);
        prop_assert_eq!(basis.len(), n - rank);
        for b in &basis {
            for row in &m {
                let dot: BigInt = row.iter().zip(b).map(|(a, x)| a * x).sum();
                prop_assert!(dot == BigInt::from(0));
            }
        }
        if !basis.is_empty() {
            let k = basis.len();
            let mut g = BigInt::from(0);
            for cols in combinations(n, k) {
                let d = minor_det(&basis, &cols);
                g = num::integer::gcd(g, d);
            }
            prop_assert!(g == BigInt::from(1), "kernel basis is not saturated: gcd {g}");
        }
    }
}
