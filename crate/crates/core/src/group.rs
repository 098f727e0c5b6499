//! Finite permutation groups with fully enumerated elements, conjugacy data,
//! and normal-structure computations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num::integer::lcm;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A finite permutation group with its element set enumerated explicitly.
/// Immutable after construction; derived class data is cached lazily.
pub struct Group {
    id: u64,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    exponent: u64,
    elem_order: Vec<u32>,
    inv: Vec<u32>,
    classes: OnceLock<Classes>,
    real_classes: OnceLock<RealClasses>,
}

/// Conjugacy class data with a deterministic ordering: classes are sorted by
/// element order, then by the lexicographically least member permutation.
pub struct Classes {
    /// Class index of each element.
    pub class_of: Vec<u32>,
    /// Element index of the least member of each class.
    pub reps: Vec<u32>,
    pub sizes: Vec<u32>,
    /// Element order of the class representative.
    pub orders: Vec<u64>,
    /// Members of each class, sorted by element index.
    pub members: Vec<Vec<u32>>,
    /// powers[i][k] = class of reps[i]^k for k < orders[i].
    powers: Vec<Vec<u32>>,
    /// Class of the inverses of each class.
    pub inv_class: Vec<u32>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class index of reps[i]^k, for any k ≥ 0.
    pub fn power_class(&self, i: usize, k: u64) -> u32 {
        self.powers[i][(k % self.orders[i]) as usize]
    }
}

/// Partition of the conjugacy classes into real classes (g) ∪ (g⁻¹).
pub struct RealClasses {
    /// Each real class as one or two ordinary class indices.
    pub members: Vec<Vec<u32>>,
    /// Real class index of each ordinary class.
    pub real_of: Vec<u32>,
    /// Element index of the least member of the union.
    pub reps: Vec<u32>,
}

impl RealClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A subgroup given as a sorted set of element indices of a parent group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    pub elems: Vec<u32>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn trivial() -> Self {
        Subgroup { elems: vec![0] }
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(degree {}, order {}, {} generators)",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

impl Group {
    /// Enumerates the group generated by `generators` by breadth-first closure.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let id = NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed);
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut queue = VecDeque::new();
        queue.push_back(0u32);
        while let Some(v) = queue.pop_front() {
            for g in &generators {
                let w = elements[v as usize].compose(g);
                if !index.contains_key(&w) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    let idx = elements.len() as u32;
                    index.insert(w.clone(), idx);
                    elements.push(w);
                    queue.push_back(idx);
                }
            }
        }
        let mut exponent: u64 = 1;
        let mut elem_order = Vec::with_capacity(elements.len());
        for e in &elements {
            let o = e.order();
            exponent = lcm(exponent, o);
            elem_order.push(o as u32);
        }
        let inv = elements.iter().map(|e| index[&e.inverse()]).collect();
        Ok(Group {
            id,
            degree,
            generators,
            elements,
            index,
            exponent,
            elem_order,
            inv,
            classes: OnceLock::new(),
            real_classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree.max(1), vec![]).expect("trivial group")
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index.contains_key(p)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[&p]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// h g h⁻¹ as element indices.
    #[inline]
    pub fn conj(&self, g: u32, h: u32) -> u32 {
        let p = self.elements[h as usize]
            .compose(&self.elements[g as usize])
            .compose(&self.elements[self.inv[h as usize] as usize]);
        self.index[&p]
    }

    pub fn order_of(&self, e: u32) -> u64 {
        self.elem_order[e as usize] as u64
    }

    pub fn pow(&self, e: u32, k: u64) -> u32 {
        let o = self.order_of(e);
        let k = k % o;
        let p = self.elements[e as usize].pow(k);
        self.index[&p]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Conjugacy classes, computed once and cached.
    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> Classes {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        // Conjugating only by generators suffices: the orbit of conjugation by
        // the generated group equals the orbit under generator conjugation.
        let gen_idx: Vec<u32> = self.generators.iter().map(|g| self.index[g]).collect();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let cid = raw_members.len() as u32;
            let mut members = vec![start];
            class_of[start as usize] = cid;
            let mut queue = VecDeque::new();
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &g in &gen_idx {
                    let y = self.conj(x, g);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = cid;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            raw_members.push(members);
        }
        // Canonical ordering: (element order of rep, lex-least member).
        let mut order_key: Vec<(u64, &Permutation, usize)> = raw_members
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let min_elem = m
                    .iter()
                    .map(|&e| &self.elements[e as usize])
                    .min()
                    .expect("nonempty class");
                (self.order_of(m[0]), min_elem, i)
            })
            .collect();
        order_key.sort();
        let mut members = Vec::with_capacity(raw_members.len());
        let mut reps = Vec::with_capacity(raw_members.len());
        let mut sizes = Vec::with_capacity(raw_members.len());
        let mut orders = Vec::with_capacity(raw_members.len());
        let mut remap = vec![0u32; raw_members.len()];
        for (new_id, &(ord, min_elem, old_id)) in order_key.iter().enumerate() {
            remap[old_id] = new_id as u32;
            let m = std::mem::take(&mut raw_members[old_id]);
            reps.push(self.index[min_elem]);
            sizes.push(m.len() as u32);
            orders.push(ord);
            members.push(m);
        }
        for c in class_of.iter_mut() {
            *c = remap[*c as usize];
        }
        let powers: Vec<Vec<u32>> = (0..reps.len())
            .map(|i| {
                let o = orders[i];
                let mut acc = 0u32; // identity
                let mut row = Vec::with_capacity(o as usize);
                for _ in 0..o {
                    row.push(class_of[acc as usize]);
                    acc = self.mul(acc, reps[i]);
                }
                // row[k] is the class of reps[i]^k.
                row
            })
            .collect();
        let inv_class = (0..reps.len())
            .map(|i| class_of[self.inv[reps[i] as usize] as usize])
            .collect();
        Classes {
            class_of,
            reps,
            sizes,
            orders,
            members,
            powers,
            inv_class,
        }
    }

    pub fn nclasses(&self) -> usize {
        self.classes().len()
    }

    /// Real conjugacy classes (g) ∪ (g⁻¹).
    pub fn real_classes(&self) -> &RealClasses {
        self.real_classes.get_or_init(|| {
            let cls = self.classes();
            let k = cls.len();
            let mut real_of = vec![u32::MAX; k];
            let mut members = Vec::new();
            let mut reps = Vec::new();
            for i in 0..k {
                if real_of[i] != u32::MAX {
                    continue;
                }
                let rid = members.len() as u32;
                let j = cls.inv_class[i] as usize;
                real_of[i] = rid;
                let entry = if j == i {
                    vec![i as u32]
                } else {
                    real_of[j] = rid;
                    vec![i as u32, j as u32]
                };
                let rep = entry
                    .iter()
                    .flat_map(|&c| cls.members[c as usize].iter().copied())
                    .map(|e| (&self.elements[e as usize], e))
                    .min()
                    .map(|(_, e)| e)
                    .expect("nonempty real class");
                members.push(entry);
                reps.push(rep);
            }
            RealClasses {
                members,
                real_of,
                reps,
            }
        })
    }

    pub fn nrealclasses(&self) -> usize {
        self.real_classes().len()
    }

    /// |C_G(g)| = |G| / |class of g|.
    pub fn centralizer_order(&self, g: &Permutation) -> Result<usize> {
        let idx = self.index_of(g).ok_or(Error::ElementNotInGroup)?;
        let cls = self.classes();
        Ok(self.order() / cls.sizes[cls.class_of[idx as usize] as usize] as usize)
    }

    // ----- subgroup machinery -----

    /// Closure of a set of element indices under product.
    pub fn closure(&self, seed: &[u32]) -> Subgroup {
        let mut set = HashSet::new();
        set.insert(0u32);
        let mut stack: Vec<u32> = vec![0];
        let gens: Vec<u32> = seed.iter().copied().filter(|&e| set.insert(e)).collect();
        stack.extend(gens.iter().copied());
        let mut i = 0;
        while i < stack.len() {
            let v = stack[i];
            i += 1;
            for &g in &gens {
                let w = self.mul(v, g);
                if set.insert(w) {
                    stack.push(w);
                }
            }
        }
        // A finite product-closed subset of a group is a subgroup.
        let mut elems: Vec<u32> = set.into_iter().collect();
        elems.sort_unstable();
        Subgroup { elems }
    }

    /// Closure of an existing subgroup together with extra elements.
    pub fn extend_subgroup(&self, h: &Subgroup, extra: &[u32]) -> Subgroup {
        let mut seed = h.elems.clone();
        seed.extend_from_slice(extra);
        self.closure(&seed)
    }

    /// Normal closure: the subgroup generated by all conjugates of `seed`.
    pub fn normal_closure(&self, seed: &[u32]) -> Subgroup {
        let cls = self.classes();
        let mut expanded = Vec::new();
        let mut done = HashSet::new();
        for &e in seed {
            let c = cls.class_of[e as usize];
            if done.insert(c) {
                expanded.extend_from_slice(&cls.members[c as usize]);
            }
        }
        self.closure(&expanded)
    }

    pub fn subgroup_from_perms(&self, perms: &[Permutation]) -> Result<Subgroup> {
        let seed: Vec<u32> = perms
            .iter()
            .map(|p| self.index_of(p).ok_or(Error::SubgroupMismatch))
            .collect::<Result<_>>()?;
        Ok(self.closure(&seed))
    }

    /// Realizes a subgroup as a `Group` on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Group {
        let perms: Vec<Permutation> = self
            .small_generating_set(h)
            .iter()
            .map(|&e| self.elements[e as usize].clone())
            .collect();
        Group::from_generators_capped(self.degree, perms, h.order() + 1)
            .expect("subgroup closure is closed")
    }

    /// Embeds another group (on the same points) as a subgroup of `self`.
    pub fn embed(&self, h: &Group) -> Result<Subgroup> {
        if h.degree != self.degree {
            return Err(Error::SubgroupMismatch);
        }
        let mut elems = Vec::with_capacity(h.order());
        for p in &h.elements {
            elems.push(self.index_of(p).ok_or(Error::SubgroupMismatch)?);
        }
        elems.sort_unstable();
        Ok(Subgroup { elems })
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, by: u32) -> Subgroup {
        let mut elems: Vec<u32> = h.elems.iter().map(|&e| self.conj(e, by)).collect();
        elems.sort_unstable();
        Subgroup { elems }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators.iter().all(|g| {
            let gi = self.index[g];
            h.elems.iter().all(|&e| h.contains(self.conj(e, gi)))
        })
    }

    /// Whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            elems: (0..self.order() as u32).collect(),
        }
    }

    /// Normalizer N_G(H) as a subgroup.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mut elems = Vec::new();
        for g in 0..self.order() as u32 {
            if h.elems.iter().all(|&e| h.contains(self.conj(e, g))) {
                elems.push(g);
            }
        }
        Subgroup { elems }
    }

    /// Commutator subgroup [A, B] = ⟨[a,b]⟩ as a normal-closure inside ⟨A,B⟩.
    /// Both arguments must be normal in the group for the plain closure to be
    /// correct in general; we take the normal closure to stay safe.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut seed = Vec::new();
        for &x in &a.elems {
            for &y in &b.elems {
                // [x,y] = x y x⁻¹ y⁻¹
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                seed.push(c);
            }
        }
        seed.sort_unstable();
        seed.dedup();
        self.closure(&seed)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let full = self.full_subgroup();
        self.commutator_subgroup(&full, &full)
    }

    /// Stable term of the derived series.
    pub fn solvable_residual(&self) -> Subgroup {
        let mut cur = self.full_subgroup();
        loop {
            let next = self.commutator_subgroup(&cur, &cur);
            if next.order() == cur.order() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.solvable_residual().order() == 1
    }

    pub fn is_perfect_subgroup(&self, h: &Subgroup) -> bool {
        self.commutator_subgroup(h, h).order() == h.order()
    }

    /// Stable term of the lower central series; the quotient by it is the
    /// largest nilpotent quotient.
    pub fn nilpotent_residual(&self) -> Subgroup {
        let full = self.full_subgroup();
        let mut cur = full.clone();
        loop {
            let next = self.commutator_subgroup(&cur, &full);
            if next.order() == cur.order() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotent_residual().order() == 1
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        (0..self.order() as u32).any(|e| self.order_of(e) == n)
    }

    /// O^p(G): the smallest normal subgroup with p-group quotient, generated
    /// by all elements of order coprime to p.
    pub fn o_p_residual(&self, p: u64) -> Result<Subgroup> {
        if !crate::gf::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let seed: Vec<u32> = (0..self.order() as u32)
            .filter(|&e| self.order_of(e) % p != 0)
            .collect();
        Ok(self.closure(&seed))
    }

    /// Every normal subgroup, as joins of normal closures of single classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let cls = self.classes();
        let mut found: HashSet<Vec<u32>> = HashSet::new();
        let mut out: Vec<Subgroup> = Vec::new();
        let mut push = |s: Subgroup, out: &mut Vec<Subgroup>| -> bool {
            if found.insert(s.elems.clone()) {
                out.push(s);
                true
            } else {
                false
            }
        };
        push(Subgroup::trivial(), &mut out);
        for i in 0..cls.len() {
            let s = self.normal_closure(&[cls.reps[i]]);
            push(s, &mut out);
        }
        // Close under joins.
        let mut i = 0;
        while i < out.len() {
            let mut j = 0;
            while j < i {
                let join = self.extend_subgroup(&out[i], &out[j].elems);
                push(join, &mut out);
                j += 1;
            }
            i += 1;
        }
        out.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elems.cmp(&b.elems))
        });
        out
    }

    /// Quotient G/N by the action on left cosets, with the coset index of
    /// every element. Fails if N is not normal.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, Vec<u32>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        let mut coset_of = vec![u32::MAX; order];
        let mut coset_reps: Vec<u32> = Vec::new();
        for e in 0..order as u32 {
            if coset_of[e as usize] != u32::MAX {
                continue;
            }
            let cid = coset_reps.len() as u32;
            coset_reps.push(e);
            for &h in &n.elems {
                coset_of[self.mul(e, h) as usize] = cid;
            }
        }
        let ncosets = coset_reps.len();
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| {
                let gi = self.index[g];
                let images: Vec<u16> = coset_reps
                    .iter()
                    .map(|&r| coset_of[self.mul(gi, r) as usize] as u16)
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            })
            .collect();
        let q = Group::from_generators_capped(ncosets.max(1), gens, ncosets + 1)?;
        Ok((q, coset_of))
    }

    /// Coset representatives (least element index per coset) for a coset map
    /// produced by [`Group::quotient`].
    pub fn coset_reps(&self, coset_of: &[u32], ncosets: usize) -> Vec<u32> {
        let mut reps = vec![u32::MAX; ncosets];
        for (el, &c) in coset_of.iter().enumerate() {
            if reps[c as usize] == u32::MAX {
                reps[c as usize] = el as u32;
            }
        }
        reps
    }

    /// Image of an element in the quotient computed by [`Group::quotient`].
    pub fn quotient_image(&self, coset_of: &[u32], reps: &[u32], q: &Group, e: u32) -> u32 {
        let images: Vec<u16> = (0..q.degree())
            .map(|c| coset_of[self.mul(e, reps[c]) as usize] as u16)
            .collect();
        let p = Permutation::from_images(images).expect("coset action");
        q.index_of(&p).expect("quotient image")
    }

    /// Greedy small generating set of a subgroup.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut cur = Subgroup::trivial();
        for &e in &h.elems {
            if !cur.contains(e) {
                gens.push(e);
                cur = self.extend_subgroup(&cur, &[e]);
                if cur.order() == h.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Direct product acting on the disjoint union of the point sets.
    pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
        let degree = a.degree + b.degree;
        let mut gens = Vec::new();
        for g in &a.generators {
            let mut images: Vec<u16> = g.images().to_vec();
            images.extend((a.degree..degree).map(|x| x as u16));
            gens.push(Permutation::from_images(images)?);
        }
        for g in &b.generators {
            let mut images: Vec<u16> = (0..a.degree as u16).collect();
            images.extend(g.images().iter().map(|&x| x + a.degree as u16));
            gens.push(Permutation::from_images(images)?);
        }
        let cap = a
            .order()
            .checked_mul(b.order())
            .ok_or(Error::OrderCapExceeded { cap: usize::MAX })?;
        if cap > DEFAULT_ORDER_CAP {
            return Err(Error::OrderCapExceeded {
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let g = Group::from_generators_capped(degree, gens, cap + 1)?;
        debug_assert_eq!(g.order(), cap);
        Ok(g)
    }

    /// Projects an element of a direct product onto one factor by restricting
    /// the permutation to the factor's points.
    pub fn project_factor(&self, e: u32, offset: usize, factor: &Group) -> u32 {
        let p = &self.elements[e as usize];
        let images: Vec<u16> = (offset..offset + factor.degree())
            .map(|x| (p.apply(x) - offset) as u16)
            .collect();
        let q = Permutation::from_images(images).expect("factor projection");
        factor.index_of(&q).expect("factor element")
    }

    /// Class tally of an element set: how many members fall in each class.
    pub fn class_tally(&self, elems: &[u32]) -> Vec<u32> {
        let cls = self.classes();
        let mut tally = vec![0u32; cls.len()];
        for &e in elems {
            tally[cls.class_of[e as usize] as usize] += 1;
        }
        tally
    }
}

/// Number of distinct prime divisors of n.
pub fn prime_divisor_count(mut n: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            count += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Prime divisors of n, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True when n = p^k for the given prime p (k ≥ 0).
pub fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// True when n is a prime power, counting 1 = p⁰.
pub fn is_prime_power(n: u64) -> bool {
    n == 1 || prime_divisor_count(n) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Group {
        let gen = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap();
        Group::from_generators(n, vec![gen]).unwrap()
    }

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

    #[test]
    fn trivial_group() {
        let g = Group::trivial(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.nclasses(), 1);
    }

    #[test]
    fn cyclic_basics() {
        let c6 = cyclic(6);
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.exponent(), 6);
        assert_eq!(c6.nclasses(), 6);
        assert_eq!(c6.nrealclasses(), 4);
        assert!(c6.is_cyclic());
        let orders: Vec<usize> = c6.normal_subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        let o2 = c6.o_p_residual(2).unwrap();
        assert_eq!(o2.order(), 3);
    }

    #[test]
    fn s4_structure() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.nclasses(), 5);
        let cls = g.classes();
        assert_eq!(cls.sizes.iter().sum::<u32>() as usize, g.order());
        for i in 0..cls.len() {
            assert_eq!(g.order() % cls.sizes[i] as usize, 0);
        }
        let derived = g.derived_subgroup();
        assert_eq!(derived.order(), 12);
        let nil = g.nilpotent_residual();
        assert_eq!(nil.order(), 12); // A4: S4/A4 = C2 is the largest nilpotent quotient
        assert!(g.is_solvable());
        assert!(!g.is_nilpotent());
    }

    #[test]
    fn quotient_by_derived() {
        let g = s4();
        let a4 = g.derived_subgroup();
        let (q, coset_of) = g.quotient(&a4).unwrap();
        assert_eq!(q.order(), 2);
        // sign homomorphism
        let t = g
            .index_of(&Permutation::from_cycles(4, "(1 2)").unwrap())
            .unwrap();
        assert_ne!(coset_of[t as usize], coset_of[0]);
    }

    #[test]
    fn centralizer_and_orbit_stabilizer() {
        let g = s4();
        let cls = g.classes();
        for i in 0..cls.len() {
            let rep = g.element(cls.reps[i]).clone();
            let c = g.centralizer_order(&rep).unwrap();
            assert_eq!(c * cls.sizes[i] as usize, g.order());
        }
    }

    #[test]
    fn direct_product_counts() {
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        let p = Group::direct_product(&c2, &c3).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.nclasses(), 6);
        assert!(p.is_cyclic());
    }
}
