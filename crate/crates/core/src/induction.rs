//! Class fusion, induced characters, and the monomorphism criteria for the
//! induction maps R(H) → R(G) and RO(H) → RO(G), with exact rank
//! cross-checks of the induction matrices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;

use crate::chartab::{CharTable, Character, RealIrreducibles};
use crate::cyclo::Cyc;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg;
use crate::perm::Permutation;

/// Class and real-class fusion of a subgroup H into an ambient group G,
/// with the counting statistics (a, b, a', b').
pub struct Fusion {
    /// For each H-class, the index of the G-class containing it.
    pub class_map: Vec<u32>,
    /// For each H-real-class, the index of the G-real-class containing it.
    pub real_map: Vec<u32>,
    /// Number of G-classes meeting H.
    pub a: usize,
    /// Number of H-classes.
    pub b: usize,
    /// Number of G-real-classes meeting H.
    pub a_real: usize,
    /// Number of H-real-classes.
    pub b_real: usize,
}

/// Computes the fusion maps for H ≤ G. H must act on the same points with
/// every element contained in G.
pub fn fusion(g: &Group, h: &Group) -> Result<Fusion> {
    if h.degree() != g.degree() {
        return Err(Error::SubgroupMismatch);
    }
    let hcls = h.classes();
    let gcls = g.classes();
    let mut class_map = Vec::with_capacity(hcls.len());
    for i in 0..hcls.len() {
        let rep = h.element(hcls.reps[i]);
        let gi = g.index_of(rep).ok_or(Error::SubgroupMismatch)?;
        class_map.push(gcls.class_of[gi as usize]);
    }
    let hreal = h.real_classes();
    let greal = g.real_classes();
    let mut real_map = Vec::with_capacity(hreal.len());
    for m in &hreal.members {
        let target = greal.real_of[class_map[m[0] as usize] as usize];
        // Both constituents of an H-real-class land in the same G-real-class.
        debug_assert!(m
            .iter()
            .all(|&c| greal.real_of[class_map[c as usize] as usize] == target));
        real_map.push(target);
    }
    let a = {
        let mut seen: Vec<u32> = class_map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    let a_real = {
        let mut seen: Vec<u32> = real_map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    };
    Ok(Fusion {
        a,
        b: hcls.len(),
        a_real,
        b_real: hreal.len(),
        class_map,
        real_map,
    })
}

/// Verdict of a monomorphism test, with the least failing element when the
/// criterion fails.
#[derive(Clone, Debug)]
pub enum MonoVerdict {
    Mono,
    NotMono { witness: Permutation },
}

impl MonoVerdict {
    pub fn is_mono(&self) -> bool {
        matches!(self, MonoVerdict::Mono)
    }
}

/// Ind_H^G on R(H) is injective iff (h)_G ∩ H = (h)_H for every h ∈ H,
/// i.e. iff the class fusion map is injective.
pub fn mono_complex(g: &Group, h: &Group) -> Result<MonoVerdict> {
    let fus = fusion(g, h)?;
    Ok(mono_from_map(h, &fus.class_map, |cls_idx| {
        h.classes().members[cls_idx].clone()
    }))
}

/// Ind_H^G on RO(H) is injective iff (h)±_G ∩ H = (h)±_H for every h ∈ H,
/// i.e. iff the real-class fusion map is injective.
pub fn mono_real(g: &Group, h: &Group) -> Result<MonoVerdict> {
    let fus = fusion(g, h)?;
    let hreal = h.real_classes();
    Ok(mono_from_map(h, &fus.real_map, |r| {
        hreal.members[r]
            .iter()
            .flat_map(|&c| h.classes().members[c as usize].iter().copied())
            .collect()
    }))
}

fn mono_from_map<F>(h: &Group, map: &[u32], members_of: F) -> MonoVerdict
where
    F: Fn(usize) -> Vec<u32>,
{
    let mut count: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for &target in map {
        *count.entry(target).or_insert(0) += 1;
    }
    // Every class whose target is hit more than once is a failing class.
    let colliding: Vec<usize> = (0..map.len()).filter(|&i| count[&map[i]] > 1).collect();
    if colliding.is_empty() {
        return MonoVerdict::Mono;
    }
    // The least element (canonical permutation order) in any fused class.
    let witness = colliding
        .iter()
        .flat_map(|&i| members_of(i))
        .map(|e| h.element(e).clone())
        .min()
        .expect("collision has members");
    MonoVerdict::NotMono { witness }
}

/// Induced character by the centralizer-weighted fusion formula: zero on
/// classes missing H, otherwise |C_G(g)| Σ χ(h_i)/|C_H(h_i)| over H-class
/// representatives fusing into (g).
pub fn induce_character(g: &Group, h: &Group, chi: &Character) -> Result<Character> {
    if chi.group_id != h.id() {
        return Err(Error::GroupMismatch);
    }
    let fus = fusion(g, h)?;
    let gcls = g.classes();
    let hcls = h.classes();
    let conductor = num::integer::lcm(chi.values[0].conductor() as u64, g.exponent()) as u32;
    let mut values = vec![Cyc::zero(conductor); gcls.len()];
    for s in 0..gcls.len() {
        let cg =
            BigRational::from_integer(BigInt::from((g.order() / gcls.sizes[s] as usize) as i64));
        let mut sum = Cyc::zero(conductor);
        let mut hit = false;
        for i in 0..hcls.len() {
            if fus.class_map[i] != s as u32 {
                continue;
            }
            hit = true;
            let ch = BigRational::from_integer(BigInt::from(
                (h.order() / hcls.sizes[i] as usize) as i64,
            ));
            sum = sum.add(&chi.values[i].embed(conductor).scale(&ch.recip()));
        }
        if hit {
            values[s] = sum.scale(&cg);
        }
    }
    Ok(Character {
        group_id: g.id(),
        values,
    })
}

/// Restriction of a G-character to H-classes.
pub fn restrict_character(g: &Group, h: &Group, psi: &Character) -> Result<Character> {
    if psi.group_id != g.id() {
        return Err(Error::GroupMismatch);
    }
    let fus = fusion(g, h)?;
    Ok(Character {
        group_id: h.id(),
        values: fus
            .class_map
            .iter()
            .map(|&s| psi.values[s as usize].clone())
            .collect(),
    })
}

/// The induction matrices over the complex and real irreducible bases,
/// with non-negative integer multiplicity entries.
pub struct InductionMap {
    pub fusion: Fusion,
    /// rows = H-irreducibles, cols = G-irreducibles.
    pub matrix_complex: Vec<Vec<BigInt>>,
    /// rows = H-real-irreducibles, cols = G-real-irreducibles.
    pub matrix_real: Vec<Vec<BigInt>>,
}

pub fn induction_map(
    g: &Group,
    h: &Group,
    tg: &CharTable,
    th: &CharTable,
    rg: &RealIrreducibles,
    rh: &RealIrreducibles,
) -> Result<InductionMap> {
    let fus = fusion(g, h)?;
    let mut matrix_complex = Vec::with_capacity(th.len());
    for chi in &th.chars {
        let ind = induce_character(g, h, chi)?;
        let mut row = Vec::with_capacity(tg.len());
        for psi in &tg.chars {
            let m = crate::chartab::inner_product(g, &ind, psi)?;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::InternalInconsistency(format!(
                    "induced multiplicity {m} is not a non-negative integer"
                )));
            }
            row.push(m.to_integer());
        }
        matrix_complex.push(row);
    }
    let mut matrix_real = Vec::with_capacity(rh.len());
    for chi in &rh.chars {
        let ind = induce_character(g, h, chi)?;
        let row = decompose_real(g, rg, &ind)?
            .into_iter()
            .map(BigInt::from)
            .collect();
        matrix_real.push(row);
    }
    Ok(InductionMap {
        fusion: fus,
        matrix_complex,
        matrix_real,
    })
}

/// Multiplicities of the character of a real module over the real
/// irreducible basis: m_W = ⟨θ, χ_W⟩ / ⟨χ_W, χ_W⟩, the norm being 1, 2 or 4
/// for real, complex-pair and quaternionic type respectively.
pub fn decompose_real(g: &Group, rg: &RealIrreducibles, theta: &Character) -> Result<Vec<i64>> {
    use crate::chartab::RealType;
    use num::ToPrimitive;
    let mut out = Vec::with_capacity(rg.len());
    for (w, prov) in rg.chars.iter().zip(&rg.provenance) {
        let norm = match prov {
            RealType::Real(_) => 1i64,
            RealType::ComplexPair(..) => 2,
            RealType::Quaternionic(_) => 4,
        };
        let ip = crate::chartab::inner_product(g, theta, w)?;
        let mult = ip / BigRational::from_integer(BigInt::from(norm));
        if !mult.is_integer() || mult.is_negative() {
            return Err(Error::NotIntegral(format!(
                "real multiplicity {mult} for a supposed real character"
            )));
        }
        out.push(
            mult.to_integer()
                .to_i64()
                .ok_or_else(|| Error::InternalInconsistency("multiplicity overflows i64".into()))?,
        );
    }
    Ok(out)
}

/// Exact rank of the induction matrix over Q, with a modular spot-check at
/// two large primes.
pub fn induction_rank(matrix: &[Vec<BigInt>]) -> Result<usize> {
    let r = linalg::rank_bigint(matrix);
    let p1 = 1_000_000_007u64;
    let p2 = 998_244_353u64;
    let r1 = linalg::rank_mod_p(matrix, p1);
    let r2 = linalg::rank_mod_p(matrix, p2);
    if r1 != r && r2 != r {
        return Err(Error::InternalInconsistency(format!(
            "modular ranks {r1}, {r2} both disagree with rational rank {r}"
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::perm::Permutation;

    fn s4() -> Group {
        Group::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, "(1 2 3 4)").unwrap(),
                Permutation::from_cycles(4, "(1 2)").unwrap(),
            ],
        )
        .unwrap()
    }

    fn a4_in_s4(g: &Group) -> Group {
        let d = g.derived_subgroup();
        g.subgroup_as_group(&d)
    }

    #[test]
    fn fusion_of_self_is_bijective() {
        let g = s4();
        let f = fusion(&g, &g).unwrap();
        assert_eq!(f.a, f.b);
        assert!(mono_complex(&g, &g).unwrap().is_mono());
    }

    #[test]
    fn a4_in_s4_monos() {
        let g = s4();
        let h = a4_in_s4(&g);
        // The two classes of 3-cycles fuse in S4: complex fails, real holds.
        assert!(!mono_complex(&g, &h).unwrap().is_mono());
        assert!(mono_real(&g, &h).unwrap().is_mono());
        if let MonoVerdict::NotMono { witness } = mono_complex(&g, &h).unwrap() {
            assert_eq!(witness.order(), 3);
        }
    }

    #[test]
    fn induced_trivial_is_permutation_character() {
        let g = s4();
        let h = a4_in_s4(&g);
        let th = character_table(&h).unwrap();
        let ind = induce_character(&g, &h, &th.chars[0]).unwrap();
        // Degree is the index [G:H].
        assert_eq!(ind.degree(), BigInt::from(2));
    }

    #[test]
    fn frobenius_reciprocity_s4_a4() {
        let g = s4();
        let h = a4_in_s4(&g);
        let tg = character_table(&g).unwrap();
        let th = character_table(&h).unwrap();
        for chi in &th.chars {
            let ind = induce_character(&g, &h, chi).unwrap();
            for psi in &tg.chars {
                let lhs = crate::chartab::inner_product(&g, &ind, psi).unwrap();
                let res = restrict_character(&g, &h, psi).unwrap();
                let rhs = crate::chartab::inner_product(&h, chi, &res).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
