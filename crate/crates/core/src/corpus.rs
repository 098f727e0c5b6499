//! Bundled corpus of named groups, validated by order and class-count
//! fingerprints on load.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::linear;
use crate::perm::Permutation;

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub expected_order: usize,
    pub expected_classes: usize,
    build: fn() -> Result<Group>,
}

fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("corpus generator")
}

pub fn cyclic(n: usize) -> Group {
    let gen = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect())
        .expect("cyclic generator");
    Group::from_generators(n, vec![gen]).expect("cyclic group")
}

/// Dihedral group of order 2n acting on n points.
pub fn dihedral(two_n: usize) -> Group {
    assert!(two_n % 2 == 0 && two_n >= 4);
    let n = two_n / 2;
    let rot = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap();
    let refl = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u16).collect()).unwrap();
    Group::from_generators(n, vec![rot, refl]).expect("dihedral group")
}

pub fn symmetric(n: usize) -> Group {
    let mut gens = vec![perm(n, "(1 2)")];
    if n > 2 {
        let cycle: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
        gens.push(Permutation::from_images(cycle).unwrap());
    }
    Group::from_generators(n, gens).expect("symmetric group")
}

pub fn alternating4() -> Group {
    Group::from_generators(4, vec![perm(4, "(1 2 3)"), perm(4, "(1 2)(3 4)")]).expect("A4")
}

fn a4_on(points: [usize; 4], degree: usize) -> Vec<Permutation> {
    let cyc3 = format!("({} {} {})", points[0], points[1], points[2]);
    let dd = format!("({} {})({} {})", points[0], points[1], points[2], points[3]);
    vec![perm(degree, &cyc3), perm(degree, &dd)]
}

/// (C2²⋊C3) ≀ C2 of order 288: two commuting A4 blocks swapped by an
/// involution.
pub fn g3() -> Result<Group> {
    let mut gens = a4_on([1, 2, 3, 4], 8);
    gens.extend(a4_on([5, 6, 7, 8], 8));
    gens.push(perm(8, "(1 5)(2 6)(3 7)(4 8)"));
    Group::from_generators(8, gens)
}

/// A4² ⋊ C2² of order 576: the two A4 blocks, the block swap, and the
/// diagonal pair of transpositions acting by the outer automorphism.
pub fn g4() -> Result<Group> {
    let mut gens = a4_on([1, 2, 3, 4], 8);
    gens.extend(a4_on([5, 6, 7, 8], 8));
    gens.push(perm(8, "(1 5)(2 6)(3 7)(4 8)"));
    gens.push(perm(8, "(1 2)(5 6)"));
    Group::from_generators(8, gens)
}

/// Aut(A6) as the semilinear projective group on the 10 points of the
/// projective line over F9 = F3[i]: Möbius maps t ↦ t+1, t ↦ νt, t ↦ 1/t and
/// the field automorphism t ↦ t³.
pub fn aut_a6() -> Result<Group> {
    // F9 elements a+bi indexed a+3b for a,b in {0,1,2}; the point ∞ is 9.
    let q = 9usize;
    let inf = q;
    let add = |x: usize, y: usize| -> usize {
        let (a1, b1) = (x % 3, x / 3);
        let (a2, b2) = (y % 3, y / 3);
        (a1 + a2) % 3 + 3 * ((b1 + b2) % 3)
    };
    let mul = |x: usize, y: usize| -> usize {
        let (a1, b1) = (x % 3, x / 3);
        let (a2, b2) = (y % 3, y / 3);
        // (a1 + b1 i)(a2 + b2 i) with i² = −1 ≡ 2
        let a = (a1 * a2 + 2 * b1 * b2) % 3;
        let b = (a1 * b2 + a2 * b1) % 3;
        a + 3 * b
    };
    let inv = |x: usize| -> usize { (1..q).find(|&y| mul(x, y) == 1).expect("F9 inverse") };
    let nu = (1..q)
        .find(|&x| {
            let mut acc = x;
            let mut ord = 1;
            while acc != 1 {
                acc = mul(acc, x);
                ord += 1;
            }
            ord == 8
        })
        .expect("F9 generator");
    let mk = |f: &dyn Fn(usize) -> usize| -> Result<Permutation> {
        Permutation::from_images((0..=q).map(|x| f(x) as u16).collect())
    };
    let translation = mk(&|x| if x == inf { inf } else { add(x, 1) })?;
    let scaling = mk(&|x| if x == inf { inf } else { mul(x, nu) })?;
    let inversion = mk(&|x| {
        if x == inf {
            0
        } else if x == 0 {
            inf
        } else {
            inv(x)
        }
    })?;
    let frobenius = mk(&|x| if x == inf { inf } else { mul(x, mul(x, x)) })?;
    Group::from_generators(10, vec![translation, scaling, inversion, frobenius])
}

pub fn entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry {
            name: "trivial",
            description: "trivial group",
            expected_order: 1,
            expected_classes: 1,
            build: || Ok(Group::trivial(1)),
        },
        CorpusEntry {
            name: "c2",
            description: "cyclic group of order 2",
            expected_order: 2,
            expected_classes: 2,
            build: || Ok(cyclic(2)),
        },
        CorpusEntry {
            name: "c3",
            description: "cyclic group of order 3",
            expected_order: 3,
            expected_classes: 3,
            build: || Ok(cyclic(3)),
        },
        CorpusEntry {
            name: "c6",
            description: "cyclic group of order 6",
            expected_order: 6,
            expected_classes: 6,
            build: || Ok(cyclic(6)),
        },
        CorpusEntry {
            name: "c15",
            description: "cyclic group of order 15",
            expected_order: 15,
            expected_classes: 15,
            build: || Ok(cyclic(15)),
        },
        CorpusEntry {
            name: "c30",
            description: "cyclic group of order 30",
            expected_order: 30,
            expected_classes: 30,
            build: || Ok(cyclic(30)),
        },
        CorpusEntry {
            name: "c6sq",
            description: "C6 × C6",
            expected_order: 36,
            expected_classes: 36,
            build: || Group::direct_product(&cyclic(6), &cyclic(6)),
        },
        CorpusEntry {
            name: "s3",
            description: "symmetric group on 3 points",
            expected_order: 6,
            expected_classes: 3,
            build: || Ok(symmetric(3)),
        },
        CorpusEntry {
            name: "a4",
            description: "alternating group on 4 points",
            expected_order: 12,
            expected_classes: 4,
            build: || Ok(alternating4()),
        },
        CorpusEntry {
            name: "s4",
            description: "symmetric group on 4 points",
            expected_order: 24,
            expected_classes: 5,
            build: || Ok(symmetric(4)),
        },
        CorpusEntry {
            name: "d30",
            description: "dihedral group of order 30",
            expected_order: 30,
            expected_classes: 9,
            build: || Ok(dihedral(30)),
        },
        CorpusEntry {
            name: "sl2_3",
            description: "SL(2,3)",
            expected_order: 24,
            expected_classes: 7,
            build: || linear::sl2(3),
        },
        CorpusEntry {
            name: "sl2_4",
            description: "SL(2,4)",
            expected_order: 60,
            expected_classes: 5,
            build: || linear::sl2(4),
        },
        CorpusEntry {
            name: "sl2_5",
            description: "SL(2,5)",
            expected_order: 120,
            expected_classes: 9,
            build: || linear::sl2(5),
        },
        CorpusEntry {
            name: "gl2_3",
            description: "GL(2,3)",
            expected_order: 48,
            expected_classes: 8,
            build: || linear::gl2(3),
        },
        CorpusEntry {
            name: "gl2_4",
            description: "GL(2,4)",
            expected_order: 180,
            expected_classes: 15,
            build: || linear::gl2(4),
        },
        CorpusEntry {
            name: "gl2_5",
            description: "GL(2,5)",
            expected_order: 480,
            expected_classes: 24,
            build: || linear::gl2(5),
        },
        CorpusEntry {
            name: "sl2_5xc2",
            description: "SL(2,5) × C2",
            expected_order: 240,
            expected_classes: 18,
            build: || Group::direct_product(&linear::sl2(5)?, &cyclic(2)),
        },
        CorpusEntry {
            name: "g1",
            description: "C3 × S4",
            expected_order: 72,
            expected_classes: 15,
            build: || Group::direct_product(&cyclic(3), &symmetric(4)),
        },
        CorpusEntry {
            name: "g2",
            description: "S3 × A4",
            expected_order: 72,
            expected_classes: 12,
            build: || Group::direct_product(&symmetric(3), &alternating4()),
        },
        CorpusEntry {
            name: "g3",
            description: "(C2²⋊C3)² ⋊ C2, order 288",
            expected_order: 288,
            expected_classes: 14,
            build: g3,
        },
        CorpusEntry {
            name: "g4",
            description: "A4² ⋊ C2², order 576",
            expected_order: 576,
            expected_classes: 16,
            build: g4,
        },
        CorpusEntry {
            name: "aut_a6",
            description: "Aut(A6) of order 1440",
            expected_order: 1440,
            expected_classes: 13,
            build: aut_a6,
        },
        CorpusEntry {
            name: "c6xa4xd30",
            description: "C6 × A4 × D30, order 2160",
            expected_order: 2160,
            expected_classes: 216,
            build: || {
                let left = Group::direct_product(&cyclic(6), &alternating4())?;
                Group::direct_product(&left, &dihedral(30))
            },
        },
    ]
}

/// Loads a corpus entry by name, validating its fingerprint.
pub fn load(name: &str) -> Result<Group> {
    let entry = entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unknown corpus group `{name}`"),
        })?;
    let g = (entry.build)()?;
    if g.order() != entry.expected_order || g.nclasses() != entry.expected_classes {
        return Err(Error::InternalInconsistency(format!(
            "corpus entry `{name}` fingerprint mismatch: order {} classes {} (expected {} / {})",
            g.order(),
            g.nclasses(),
            entry.expected_order,
            entry.expected_classes
        )));
    }
    Ok(g)
}
