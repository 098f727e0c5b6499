//! Subgroup lattices up to conjugacy by cyclic extension (seeded with the
//! perfect subgroups of the solvable residual), classification into the
//! prime-power / pseudocyclic / large families, and the Oliver property.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::{is_prime_power, prime_divisors, Group, Subgroup};

pub const DEFAULT_LATTICE_CAP: usize = 2000;

/// One conjugacy class of subgroups.
pub struct SubgroupClass {
    /// Canonical representative: the least member set of the orbit.
    pub rep: Subgroup,
    pub order: usize,
    /// Small generating set of the representative.
    pub generators: Vec<u32>,
    /// Some(p) when the subgroup is a p-group (the trivial subgroup reports
    /// the convention Some(1) is never used; it is flagged via order 1).
    pub is_p_group: bool,
    pub is_pseudocyclic: bool,
    pub is_large: bool,
}

/// The full subgroup lattice of a group, up to conjugacy.
pub struct SubgroupLattice {
    pub classes: Vec<SubgroupClass>,
    /// leq[i][j]: some conjugate of classes[i] is contained in classes[j].
    pub leq: Vec<Vec<bool>>,
    /// Minimal strictly-larger classes of each class.
    pub minimal_overgroups: Vec<Vec<usize>>,
    /// O^p(G) for each prime p dividing |G|, as subgroups.
    pub o_p: Vec<(u64, Subgroup)>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Indices of the classes in P(G): subgroups of prime power order,
    /// including the trivial subgroup (order 1 = p⁰).
    pub fn p_classes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.classes[i].is_p_group)
            .collect()
    }

    pub fn pseudocyclic_classes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.classes[i].is_pseudocyclic)
            .collect()
    }

    pub fn large_classes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.classes[i].is_large)
            .collect()
    }

    /// Class index of a subgroup given by an element set, if present.
    pub fn class_of(&self, g: &Group, h: &Subgroup) -> Option<usize> {
        let order = h.order();
        for (i, c) in self.classes.iter().enumerate() {
            if c.order != order {
                continue;
            }
            if subgroups_conjugate(g, &c.rep, h) {
                return Some(i);
            }
        }
        None
    }
}

/// Tests conjugacy of two subgroups by scanning conjugating elements, with
/// an order prefilter.
pub fn subgroups_conjugate(g: &Group, a: &Subgroup, b: &Subgroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if a == b {
        return true;
    }
    (0..g.order() as u32).any(|t| &g.conjugate_subgroup(a, t) == b)
}

struct OrbitIndex {
    /// Canonical member set → class id.
    by_set: HashMap<Vec<u32>, usize>,
    /// All member sets per class, in orbit order.
    orbits: Vec<Vec<Subgroup>>,
}

impl OrbitIndex {
    fn new() -> Self {
        OrbitIndex {
            by_set: HashMap::new(),
            orbits: Vec::new(),
        }
    }

    /// Returns the class id of `h`, inserting its full conjugacy orbit when
    /// new. The second component is true when the class is new.
    fn insert(&mut self, g: &Group, h: Subgroup) -> (usize, bool) {
        if let Some(&id) = self.by_set.get(&h.elems) {
            return (id, false);
        }
        let id = self.orbits.len();
        let mut orbit = vec![h.clone()];
        self.by_set.insert(h.elems.clone(), id);
        let gens: Vec<u32> = g
            .generators()
            .iter()
            .map(|p| g.index_of(p).expect("generator"))
            .collect();
        let mut stack = vec![h];
        while let Some(cur) = stack.pop() {
            for &t in &gens {
                let img = g.conjugate_subgroup(&cur, t);
                if !self.by_set.contains_key(&img.elems) {
                    self.by_set.insert(img.elems.clone(), id);
                    orbit.push(img.clone());
                    stack.push(img);
                }
            }
        }
        self.orbits.push(orbit);
        (id, true)
    }
}

/// Complete subgroup lattice up to conjugacy. Strategy: seed with the trivial
/// subgroup, all prime-order cyclic subgroups, and the perfect subgroups of
/// the solvable residual (2-generated at this scale); then repeatedly extend
/// every known class H by elements g of N_G(H) with g^p ∈ H for a prime p,
/// so K = H ∪ Hg ∪ … ∪ Hg^{p−1} is a subgroup with H normal of prime index.
pub fn subgroup_lattice(g: &Group) -> Result<SubgroupLattice> {
    subgroup_lattice_capped(g, DEFAULT_LATTICE_CAP)
}

pub fn subgroup_lattice_capped(g: &Group, cap: usize) -> Result<SubgroupLattice> {
    if g.order() > cap {
        return Err(Error::LatticeCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let mut index = OrbitIndex::new();
    let mut worklist: Vec<usize> = Vec::new();
    let push = |idx: &mut OrbitIndex, h: Subgroup, wl: &mut Vec<usize>| {
        let (id, new) = idx.insert(g, h);
        if new {
            wl.push(id);
        }
        id
    };
    push(&mut index, Subgroup::trivial(), &mut worklist);
    // Prime-order cyclic subgroups from class representatives.
    let cls = g.classes();
    for i in 0..cls.len() {
        if crate::gf::is_prime(cls.orders[i]) {
            for &e in &cls.members[i] {
                let h = g.closure(&[e]);
                push(&mut index, h, &mut worklist);
            }
        }
    }
    // Perfect subgroups live inside the solvable residual and are
    // 2-generated at this order scale.
    let residual = g.solvable_residual();
    if residual.order() > 1 {
        let res_group = g.subgroup_as_group(&residual);
        let res_cls = res_group.classes();
        for i in 0..res_cls.len() {
            let x = g
                .index_of(res_group.element(res_cls.reps[i]))
                .expect("residual element");
            for &y_local in &residual.elems {
                let h = g.closure(&[x, y_local]);
                if g.is_perfect_subgroup(&h) && h.order() > 1 {
                    push(&mut index, h, &mut worklist);
                }
            }
        }
    }
    // Cyclic extension loop.
    while let Some(id) = worklist.pop() {
        let h = index.orbits[id][0].clone();
        if h.order() == g.order() {
            continue;
        }
        let normalizer = g.normalizer(&h);
        let idx_over = g.order() / h.order();
        let primes = prime_divisors(idx_over as u64);
        for &t in &normalizer.elems {
            if h.contains(t) {
                continue;
            }
            for &p in &primes {
                let tp = g.pow(t, p);
                if !h.contains(tp) {
                    continue;
                }
                // K = ∪_{i<p} H t^i, closed because t normalizes H.
                let mut elems = Vec::with_capacity(h.order() * p as usize);
                let mut cur = 0u32;
                for _ in 0..p {
                    for &e in &h.elems {
                        elems.push(g.mul(e, cur));
                    }
                    cur = g.mul(cur, t);
                }
                elems.sort_unstable();
                elems.dedup();
                debug_assert_eq!(elems.len(), h.order() * p as usize);
                push(&mut index, Subgroup { elems }, &mut worklist);
                break;
            }
        }
    }
    // The whole group (reachable by extension when G is solvable, but not
    // when G itself is perfect). No extension step is needed from G.
    index.insert(g, g.full_subgroup());

    // Canonical class order: (order, least member set of the orbit).
    let mut order_keys: Vec<(usize, Vec<u32>, usize)> = index
        .orbits
        .iter()
        .enumerate()
        .map(|(i, orbit)| {
            let min = orbit.iter().min().expect("orbit nonempty");
            (min.order(), min.elems.clone(), i)
        })
        .collect();
    order_keys.sort();
    let mut classes = Vec::with_capacity(order_keys.len());
    let mut orbits = Vec::with_capacity(order_keys.len());
    for (order, min_elems, old) in order_keys {
        let rep = Subgroup { elems: min_elems };
        let generators = g.small_generating_set(&rep);
        classes.push(SubgroupClass {
            rep,
            order,
            generators,
            is_p_group: false,
            is_pseudocyclic: false,
            is_large: false,
        });
        orbits.push(std::mem::take(&mut index.orbits[old]));
    }

    // Containment-up-to-conjugacy and minimal overgroups.
    let k = classes.len();
    let mut leq = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if classes[j].order % classes[i].order != 0 {
                continue;
            }
            if i == j {
                leq[i][j] = true;
                continue;
            }
            let small = &classes[i].rep;
            leq[i][j] = orbits[j].iter().any(|big| contains_subgroup(big, small));
        }
    }
    let mut minimal_overgroups = vec![Vec::new(); k];
    for i in 0..k {
        for j in 0..k {
            if i == j || !leq[i][j] || classes[i].order == classes[j].order {
                continue;
            }
            let minimal = (0..k).all(|m| {
                m == i
                    || m == j
                    || !(leq[i][m]
                        && leq[m][j]
                        && classes[m].order > classes[i].order
                        && classes[m].order < classes[j].order)
            });
            if minimal {
                minimal_overgroups[i].push(j);
            }
        }
    }

    // O^p residuals and classification flags.
    let mut o_p = Vec::new();
    for p in prime_divisors(g.order() as u64) {
        o_p.push((p, g.o_p_residual(p)?));
    }
    let mut lattice = SubgroupLattice {
        classes,
        leq,
        minimal_overgroups,
        o_p,
    };
    classify(g, &mut lattice)?;
    Ok(lattice)
}

/// True when every element of `small` lies in `big` (both sorted).
pub fn contains_subgroup(big: &Subgroup, small: &Subgroup) -> bool {
    if small.order() > big.order() {
        return false;
    }
    let mut it = big.elems.iter().peekable();
    'outer: for &e in &small.elems {
        while let Some(&&b) = it.peek() {
            if b == e {
                continue 'outer;
            }
            if b > e {
                return false;
            }
            it.next();
        }
        return false;
    }
    true
}

/// Fills the P(G) / PC(G) / L(G) flags of the lattice classes.
fn classify(g: &Group, lattice: &mut SubgroupLattice) -> Result<()> {
    let o_p = lattice.o_p.clone();
    for class in lattice.classes.iter_mut() {
        class.is_p_group = is_prime_power(class.order as u64);
        class.is_large = if g.order() == 1 {
            true
        } else {
            o_p.iter()
                .any(|(_, res)| contains_subgroup(&class.rep, res))
        };
        class.is_pseudocyclic = is_pseudocyclic(g, &class.rep)?;
    }
    Ok(())
}

/// Pseudocyclic: has a normal p-subgroup P with cyclic quotient (P = H and
/// P = 1 are allowed, so p-groups and cyclic groups qualify).
pub fn is_pseudocyclic(g: &Group, h: &Subgroup) -> Result<bool> {
    let hg = g.subgroup_as_group(h);
    for n in hg.normal_subgroups() {
        if !is_prime_power(n.order() as u64) {
            continue;
        }
        // Cyclic quotient iff some element generates H together with N.
        if n.order() == hg.order() {
            return Ok(true);
        }
        let cyclic_quotient =
            (0..hg.order() as u32).any(|e| hg.extend_subgroup(&n, &[e]).order() == hg.order());
        if cyclic_quotient {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Witness chain for a failed Oliver test: P ⊴ H ⊴ G with |P| and [G:H]
/// prime powers and H/P cyclic.
pub struct OliverWitness {
    pub p_order: usize,
    pub h_order: usize,
}

/// A group is Oliver iff no chain P ⊴ H ⊴ G exists with |P| and |G/H| of
/// prime power order (1 included) and H/P cyclic.
pub fn is_oliver(g: &Group) -> Result<(bool, Option<OliverWitness>)> {
    for h in g.normal_subgroups() {
        let quotient_order = g.order() / h.order();
        if !is_prime_power(quotient_order as u64) {
            continue;
        }
        let hg = g.subgroup_as_group(&h);
        let embed = g.embed(&hg)?;
        debug_assert_eq!(embed.elems, h.elems);
        for p in hg.normal_subgroups() {
            if !is_prime_power(p.order() as u64) {
                continue;
            }
            let (q, _) = hg.quotient(&p)?;
            if q.is_cyclic() {
                return Ok((
                    false,
                    Some(OliverWitness {
                        p_order: p.order(),
                        h_order: h.order(),
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

/// Brute-force lattice oracle: all subgroups as the join-closure of the
/// cyclic subgroups, grouped into conjugacy classes. Exponential in general;
/// used to validate the cyclic-extension lattice on small groups.
pub fn brute_force_subgroups(g: &Group) -> Vec<Subgroup> {
    let mut all: HashSet<Vec<u32>> = HashSet::new();
    let mut list: Vec<Subgroup> = Vec::new();
    let mut add = |s: Subgroup, list: &mut Vec<Subgroup>| -> bool {
        if all.insert(s.elems.clone()) {
            list.push(s);
            true
        } else {
            false
        }
    };
    add(Subgroup::trivial(), &mut list);
    for e in 1..g.order() as u32 {
        let c = g.closure(&[e]);
        add(c, &mut list);
    }
    let mut i = 0;
    while i < list.len() {
        let mut j = 0;
        while j < i {
            let join = g.extend_subgroup(&list[i], &list[j].elems);
            add(join, &mut list);
            j += 1;
        }
        i += 1;
    }
    list.sort();
    list
}

/// Groups a set of subgroups into conjugacy classes; returns the canonical
/// representative (least member) of each class, sorted.
pub fn group_into_classes(g: &Group, subs: &[Subgroup]) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut reps = Vec::new();
    for s in subs {
        if seen.contains(&s.elems) {
            continue;
        }
        // Orbit under conjugation.
        let mut orbit = vec![s.clone()];
        let mut stack = vec![s.clone()];
        seen.insert(s.elems.clone());
        let gens: Vec<u32> = g
            .generators()
            .iter()
            .map(|p| g.index_of(p).expect("generator"))
            .collect();
        while let Some(cur) = stack.pop() {
            for &t in &gens {
                let img = g.conjugate_subgroup(&cur, t);
                if seen.insert(img.elems.clone()) {
                    orbit.push(img.clone());
                    stack.push(img);
                }
            }
        }
        reps.push(orbit.into_iter().min().expect("orbit"));
    }
    reps.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elems.cmp(&b.elems))
    });
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> Group {
        let gen = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap();
        Group::from_generators(n, vec![gen]).unwrap()
    }

    fn a4() -> Group {
        Group::from_generators(
            4,
            vec![
                Permutation::from_cycles(4, "(1 2 3)").unwrap(),
                Permutation::from_cycles(4, "(1 2)(3 4)").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn c6_lattice() {
        let g = cyclic(6);
        let lat = subgroup_lattice(&g).unwrap();
        let orders: Vec<usize> = lat.classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert!(lat.classes.iter().all(|c| c.is_pseudocyclic));
    }

    #[test]
    fn a4_lattice_matches_brute_force() {
        let g = a4();
        let lat = subgroup_lattice(&g).unwrap();
        let orders: Vec<usize> = lat.classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 12]);
        let brute = group_into_classes(&g, &brute_force_subgroups(&g));
        assert_eq!(brute.len(), lat.len());
        for (a, b) in brute.iter().zip(lat.classes.iter()) {
            assert_eq!(a.elems, b.rep.elems);
        }
    }

    #[test]
    fn oliver_examples() {
        let (oliver, witness) = is_oliver(&cyclic(6)).unwrap();
        assert!(!oliver);
        assert!(witness.is_some());
        let (oliver_a4, _) = is_oliver(&a4()).unwrap();
        assert!(!oliver_a4);
    }
}
