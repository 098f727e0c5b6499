//! Exact complex character tables by Dixon's modular method, Frobenius–Schur
//! indicators, and the canonical list of real irreducible characters.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::cyclo::Cyc;
use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::group::Group;
use crate::linalg::{mod_inv, mulmod, powmod};

/// A class function with exact cyclotomic values, indexed by the group's
/// canonical class order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    pub group_id: u64,
    pub values: Vec<Cyc>,
}

impl Character {
    pub fn degree(&self) -> BigInt {
        self.values[0]
            .as_integer()
            .expect("character degree is a rational integer")
    }

    pub fn conj(&self) -> Character {
        Character {
            group_id: self.group_id,
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        assert_eq!(self.group_id, other.group_id);
        Character {
            group_id: self.group_id,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Character {
        Character {
            group_id: self.group_id,
            values: self.values.iter().map(|v| v.scale_int(n)).collect(),
        }
    }
}

pub struct CharTable {
    pub group_id: u64,
    pub conductor: u32,
    pub chars: Vec<Character>,
}

impl CharTable {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.chars
            .iter()
            .map(|c| {
                let (_, digits) = c.degree().to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect()
    }
}

const PRIME_BOUND: u64 = 100_000_000;

/// Smallest prime l = 1 (mod e) with l > 2√|G|.
fn dixon_prime(exponent: u64, order: u64) -> Result<u64> {
    let min = 2 * (order as f64).sqrt() as u64 + 1;
    let mut l = exponent + 1;
    while l < PRIME_BOUND {
        if l > min && is_prime(l) {
            return Ok(l);
        }
        l += exponent;
    }
    Err(Error::NoSuitablePrime {
        exponent,
        min,
        bound: PRIME_BOUND,
    })
}

fn primitive_root(l: u64) -> u64 {
    let factors = crate::group::prime_divisors(l - 1);
    'cand: for g in 2..l {
        for &q in &factors {
            if powmod(g, (l - 1) / q, l) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("F_l has a primitive root");
}

/// Computes the exact character table of `g` by Dixon's method: find the
/// common eigenvectors of the class structure-constant matrices over F_l,
/// recover degrees, then lift values to cyclotomic integers by an exact
/// discrete Fourier inversion of eigenvalue multiplicities.
pub fn character_table(g: &Group) -> Result<CharTable> {
    let cls = g.classes();
    let k = cls.len();
    let n = g.order() as u64;
    let e = g.exponent();
    let l = dixon_prime(e, n)?;
    let omega = powmod(primitive_root(l), (l - 1) / e, l);

    // Lazily built structure-constant matrices: a[i][j][s] = #{x in C_i :
    // x^{-1} g_s in C_j}; the vector (omega_s) of normalized class sums is a
    // common eigenvector of every A_i with eigenvalue omega_i.
    let mut class_matrix: Vec<Option<Vec<Vec<u64>>>> = vec![None; k];
    let get_matrix = |i: usize, cache: &mut Vec<Option<Vec<Vec<u64>>>>| -> Vec<Vec<u64>> {
        if cache[i].is_none() {
            let mut a = vec![vec![0u64; k]; k];
            for s in 0..k {
                let target = cls.reps[s];
                for &x in &cls.members[i] {
                    let j = cls.class_of[g.mul(g.inv(x), target) as usize] as usize;
                    a[j][s] += 1;
                }
            }
            cache[i] = Some(a);
        }
        cache[i].clone().unwrap()
    };

    // Split the k-dimensional space into common eigenlines.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    let mut class_cursor = 1;
    while spaces.iter().any(|s| s.len() > 1) {
        if class_cursor >= k {
            return Err(Error::InternalInconsistency(
                "class matrices failed to separate eigenlines".into(),
            ));
        }
        let a = get_matrix(class_cursor, &mut class_matrix);
        class_cursor += 1;
        let mut next_spaces = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next_spaces.push(basis);
                continue;
            }
            let d = basis.len();
            // Image of each basis vector under A.
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    (0..k)
                        .map(|r| {
                            let mut acc = 0u64;
                            for c in 0..k {
                                if a[r][c] != 0 && v[c] != 0 {
                                    acc = (acc + mulmod(a[r][c], v[c], l)) % l;
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            // Coordinates: images[i] = Σ_j m[i][j] basis[j]. A vector
            // x·basis is an eigenvector iff x is a left eigenvector of m,
            // so scan the transpose.
            let m = express_in_basis(&basis, &images, l)?;
            let mt: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|j| m[j][i]).collect()).collect();
            let mut used = 0usize;
            for lambda in 0..l {
                if used == d {
                    break;
                }
                let mut shifted = mt.clone();
                for i in 0..d {
                    shifted[i][i] = (shifted[i][i] + l - lambda) % l;
                }
                let nullsp = nullspace_mod(&shifted, l);
                if nullsp.is_empty() {
                    continue;
                }
                used += nullsp.len();
                let sub: Vec<Vec<u64>> = nullsp
                    .iter()
                    .map(|coords| {
                        let mut v = vec![0u64; k];
                        for (bi, &c) in coords.iter().enumerate() {
                            if c != 0 {
                                for t in 0..k {
                                    v[t] = (v[t] + mulmod(c, basis[bi][t], l)) % l;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next_spaces.push(sub);
            }
            if used != d {
                return Err(Error::InternalInconsistency(
                    "class matrix is not diagonalizable over F_l".into(),
                ));
            }
        }
        spaces = next_spaces;
    }

    // Normalize each eigenline so the identity-class coordinate is 1.
    debug_assert_eq!(cls.orders[0], 1, "identity class sorts first");
    let mut rows: Vec<Character> = Vec::with_capacity(k);
    let conductor = e as u32;
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::InternalInconsistency(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let inv0 = mod_inv(v[0], l);
        let omega_s: Vec<u64> = v.iter().map(|&x| mulmod(x, inv0, l)).collect();
        // d² = |G| / Σ_s ω_s ω_{s̄} / |C_s|
        let mut sum = 0u64;
        for s in 0..k {
            let term = mulmod(
                mulmod(omega_s[s], omega_s[cls.inv_class[s] as usize], l),
                mod_inv(cls.sizes[s] as u64 % l, l),
                l,
            );
            sum = (sum + term) % l;
        }
        let d_sq = mulmod(n % l, mod_inv(sum, l), l);
        let mut degree = 0u64;
        let max_d = (n as f64).sqrt() as u64 + 1;
        for d in 1..=max_d {
            if mulmod(d, d, l) == d_sq {
                degree = d;
                break;
            }
        }
        if degree == 0 {
            return Err(Error::InternalInconsistency(
                "no integral degree matches the eigenline".into(),
            ));
        }
        // χ(g_s) mod l, then exact lift through eigenvalue multiplicities.
        let chi_mod: Vec<u64> = (0..k)
            .map(|s| {
                mulmod(
                    degree % l,
                    mulmod(omega_s[s], mod_inv(cls.sizes[s] as u64 % l, l), l),
                    l,
                )
            })
            .collect();
        let mut values = Vec::with_capacity(k);
        for s in 0..k {
            let o = cls.orders[s];
            let zeta_o = powmod(omega, e / o, l);
            let zeta_o_inv = mod_inv(zeta_o, l);
            let o_inv = mod_inv(o % l, l);
            let mut val = Cyc::zero(conductor);
            let mut total = 0u64;
            for j in 0..o {
                let mut acc = 0u64;
                for t in 0..o {
                    let c = chi_mod[cls.power_class(s, t) as usize];
                    acc = (acc + mulmod(c, powmod(zeta_o_inv, j * t, l), l)) % l;
                }
                let mult = mulmod(acc, o_inv, l);
                if mult > degree {
                    return Err(Error::InternalInconsistency(format!(
                        "eigenvalue multiplicity {mult} exceeds the degree {degree}"
                    )));
                }
                total += mult;
                if mult > 0 {
                    val =
                        val.add(&Cyc::zeta(conductor, ((e / o) * j) as i64).scale_int(mult as i64));
                }
            }
            if total != degree {
                return Err(Error::InternalInconsistency(
                    "eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            values.push(val);
        }
        rows.push(Character {
            group_id: g.id(),
            values,
        });
    }

    rows.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.values.cmp(&a.values))
    });
    let table = CharTable {
        group_id: g.id(),
        conductor,
        chars: rows,
    };
    verify_orthogonality(g, &table, true)?;
    Ok(table)
}

/// Express `images` in the row space spanned by `basis` (all mod l).
fn express_in_basis(basis: &[Vec<u64>], images: &[Vec<u64>], l: u64) -> Result<Vec<Vec<u64>>> {
    let d = basis.len();
    let k = basis[0].len();
    // Row-reduce the basis, tracking the transformation.
    let mut mat: Vec<Vec<u64>> = basis.to_vec();
    let mut trans: Vec<Vec<u64>> = (0..d)
        .map(|i| {
            let mut r = vec![0u64; d];
            r[i] = 1;
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..k {
        if row == d {
            break;
        }
        let Some(pr) = (row..d).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(row, pr);
        trans.swap(row, pr);
        let inv = mod_inv(mat[row][col], l);
        for c in 0..k {
            mat[row][c] = mulmod(mat[row][c], inv, l);
        }
        for c in 0..d {
            trans[row][c] = mulmod(trans[row][c], inv, l);
        }
        for r in 0..d {
            if r != row && mat[r][col] != 0 {
                let f = mat[r][col];
                for c in 0..k {
                    let sub = mulmod(f, mat[row][c], l);
                    mat[r][c] = (mat[r][c] + l - sub) % l;
                }
                for c in 0..d {
                    let sub = mulmod(f, trans[row][c], l);
                    trans[r][c] = (trans[r][c] + l - sub) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if row != d {
        return Err(Error::InternalInconsistency(
            "basis vectors are dependent".into(),
        ));
    }
    // images[i] = Σ_j m[i][j] basis[j]; read coordinates at pivot columns.
    let mut m = vec![vec![0u64; d]; d];
    for (i, img) in images.iter().enumerate() {
        let mut residual = img.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            let coeff_in_reduced = residual[pc];
            if coeff_in_reduced == 0 {
                continue;
            }
            // coefficient along reduced row r
            for c in 0..k {
                let sub = mulmod(coeff_in_reduced, mat[r][c], l);
                residual[c] = (residual[c] + l - sub) % l;
            }
            for c in 0..d {
                m[i][c] = (m[i][c] + mulmod(coeff_in_reduced, trans[r][c], l)) % l;
            }
        }
        if residual.iter().any(|&x| x != 0) {
            return Err(Error::InternalInconsistency(
                "class matrix does not preserve the invariant subspace".into(),
            ));
        }
    }
    Ok(m)
}

fn nullspace_mod(m: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..d {
        if row == d {
            break;
        }
        let Some(pr) = (row..d).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = mod_inv(a[row][col], l);
        for c in col..d {
            a[row][c] = mulmod(a[row][c], inv, l);
        }
        for r in 0..d {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in col..d {
                    let sub = mulmod(f, a[row][c], l);
                    a[r][c] = (a[r][c] + l - sub) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut out = Vec::new();
    for free in 0..d {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (l - a[r][free]) % l;
        }
        out.push(v);
    }
    out
}

/// First and second orthogonality relations, verified exactly.
pub fn verify_orthogonality(g: &Group, table: &CharTable, strict: bool) -> Result<()> {
    let cls = g.classes();
    let k = cls.len();
    if table.len() != k {
        return Err(Error::InternalInconsistency(format!(
            "{} irreducibles for {} classes",
            table.len(),
            k
        )));
    }
    let n = BigRational::from_integer(BigInt::from(g.order() as i64));
    // In non-strict mode (large outer-product tables) check every row norm
    // but off-diagonal pairs only against the first few rows.
    let off_diag_budget = if strict { k } else { 8.min(k) };
    for i in 0..k {
        for j in (0..=i).filter(|&j| j == i || j < off_diag_budget) {
            let mut s = Cyc::zero(table.conductor);
            for c in 0..k {
                let term = table.chars[i].values[c]
                    .mul(&table.chars[j].values[c].conj())
                    .scale_int(cls.sizes[c] as i64);
                s = s.add(&term);
            }
            let expected = if i == j {
                n.clone()
            } else {
                BigRational::zero()
            };
            if s.as_rational() != Some(expected) {
                return Err(Error::InternalInconsistency(format!(
                    "row orthogonality fails for rows {i}, {j}"
                )));
            }
        }
    }
    // Column orthogonality against the identity column and per-column norms.
    for s in 0..k {
        for t in [0usize, s] {
            let mut acc = Cyc::zero(table.conductor);
            for chi in &table.chars {
                acc = acc.add(&chi.values[s].mul(&chi.values[t].conj()));
            }
            let expected = if s == t {
                BigRational::from_integer(BigInt::from((g.order() / cls.sizes[s] as usize) as i64))
            } else {
                BigRational::zero()
            };
            if acc.as_rational() != Some(expected) {
                return Err(Error::InternalInconsistency(format!(
                    "column orthogonality fails for columns {s}, {t}"
                )));
            }
        }
    }
    Ok(())
}

/// ⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g)), an exact rational.
pub fn inner_product(g: &Group, chi: &Character, psi: &Character) -> Result<BigRational> {
    if chi.group_id != g.id() || psi.group_id != g.id() {
        return Err(Error::GroupMismatch);
    }
    let cls = g.classes();
    let target = lcm_u32(chi.values[0].conductor(), psi.values[0].conductor());
    let mut s = Cyc::zero(target);
    for c in 0..cls.len() {
        let term = chi.values[c]
            .embed(target)
            .mul(&psi.values[c].conj().embed(target))
            .scale_int(cls.sizes[c] as i64);
        s = s.add(&term);
    }
    let r = s
        .as_rational()
        .ok_or_else(|| Error::InternalInconsistency("inner product is not rational".into()))?;
    Ok(r / BigRational::from_integer(BigInt::from(g.order() as i64)))
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    num::integer::lcm(a as u64, b as u64) as u32
}

/// Frobenius–Schur indicator (1/|G|) Σ χ(g²) of an irreducible character.
pub fn frobenius_schur(g: &Group, chi: &Character) -> Result<i8> {
    let norm = inner_product(g, chi, chi)?;
    if !norm.is_one() {
        return Err(Error::NotIrreducible(norm.to_string()));
    }
    let cls = g.classes();
    let mut s = Cyc::zero(chi.values[0].conductor());
    for c in 0..cls.len() {
        let sq = cls.power_class(c, 2) as usize;
        s = s.add(&chi.values[sq].scale_int(cls.sizes[c] as i64));
    }
    let r = s
        .as_rational()
        .ok_or_else(|| Error::InternalInconsistency("FS sum is not rational".into()))?
        / BigRational::from_integer(BigInt::from(g.order() as i64));
    let val = if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else if (-r.clone()).is_one() {
        -1
    } else {
        return Err(Error::InternalInconsistency(format!(
            "FS indicator {r} outside {{-1,0,1}}"
        )));
    };
    Ok(val)
}

/// How a real irreducible arises from the complex table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealType {
    /// FS +1: the complex irreducible is itself realizable.
    Real(usize),
    /// FS 0: the sum χ + χ̄ of a conjugate pair (indices into the table).
    ComplexPair(usize, usize),
    /// FS −1: the doubled character 2χ.
    Quaternionic(usize),
}

/// The canonical list of real irreducible characters: a basis of RO(G).
pub struct RealIrreducibles {
    pub group_id: u64,
    pub conductor: u32,
    pub chars: Vec<Character>,
    pub provenance: Vec<RealType>,
    pub labels: Vec<String>,
}

impl RealIrreducibles {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.chars
            .iter()
            .map(|c| {
                let (_, d) = c.degree().to_u64_digits();
                d.first().copied().unwrap_or(0)
            })
            .collect()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Spreadsheet-style letter index: 0 → a, 25 → z, 26 → aa, …
fn letter_index(mut i: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s
}

/// Folds the complex table into real irreducible characters via the FS
/// indicator, with canonical degree-then-value ordering and labels like
/// `V4b` (degree 4, second in order).
pub fn real_irreducibles(g: &Group, table: &CharTable) -> Result<RealIrreducibles> {
    if table.group_id != g.id() {
        return Err(Error::GroupMismatch);
    }
    let mut items: Vec<(Character, RealType)> = Vec::new();
    let mut paired = vec![false; table.len()];
    for i in 0..table.len() {
        if paired[i] {
            continue;
        }
        let fs = frobenius_schur(g, &table.chars[i])?;
        match fs {
            1 => items.push((table.chars[i].clone(), RealType::Real(i))),
            -1 => items.push((table.chars[i].scale_int(2), RealType::Quaternionic(i))),
            0 => {
                let conj = table.chars[i].conj();
                let j = table
                    .chars
                    .iter()
                    .position(|c| c.values == conj.values)
                    .ok_or_else(|| {
                        Error::InternalInconsistency("conjugate character missing".into())
                    })?;
                paired[j] = true;
                items.push((table.chars[i].add(&conj), RealType::ComplexPair(i, j)));
            }
            _ => unreachable!(),
        }
        paired[i] = true;
    }
    items.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| b.0.values.cmp(&a.0.values))
    });
    if items.len() != g.nrealclasses() {
        return Err(Error::InternalInconsistency(format!(
            "{} real irreducibles vs {} real classes",
            items.len(),
            g.nrealclasses()
        )));
    }
    for (chi, _) in &items {
        if chi.values.iter().any(|v| !v.is_real()) {
            return Err(Error::InternalInconsistency(
                "real irreducible has a non-real value".into(),
            ));
        }
    }
    let mut labels = Vec::with_capacity(items.len());
    let mut deg_count: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    for (chi, _) in &items {
        let d = chi.degree().to_string();
        let c = deg_count.entry(d.clone()).or_insert(0);
        labels.push(format!("V{}{}", d, letter_index(*c)));
        *c += 1;
    }
    let (chars, provenance): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    Ok(RealIrreducibles {
        group_id: g.id(),
        conductor: table.conductor,
        chars,
        provenance,
        labels,
    })
}

/// Character table of a direct product P = A × B (as built by
/// `Group::direct_product`) as the outer product of the factor tables.
pub fn product_table(
    p: &Group,
    a: &Group,
    ta: &CharTable,
    b: &Group,
    tb: &CharTable,
) -> Result<CharTable> {
    if ta.group_id != a.id() || tb.group_id != b.id() {
        return Err(Error::GroupMismatch);
    }
    let conductor = lcm_u32(ta.conductor, tb.conductor);
    debug_assert_eq!(conductor as u64 % p.exponent(), 0);
    let cls = p.classes();
    // Factor class of each product class.
    let mut factor_classes = Vec::with_capacity(cls.len());
    for i in 0..cls.len() {
        let rep = cls.reps[i];
        let ea = p.project_factor(rep, 0, a);
        let eb = p.project_factor(rep, a.degree(), b);
        let ca = a.classes().class_of[ea as usize] as usize;
        let cb = b.classes().class_of[eb as usize] as usize;
        factor_classes.push((ca, cb));
    }
    let mut chars = Vec::with_capacity(ta.len() * tb.len());
    for chi in &ta.chars {
        for psi in &tb.chars {
            let values: Vec<Cyc> = factor_classes
                .iter()
                .map(|&(ca, cb)| {
                    chi.values[ca]
                        .embed(conductor)
                        .mul(&psi.values[cb].embed(conductor))
                })
                .collect();
            chars.push(Character {
                group_id: p.id(),
                values,
            });
        }
    }
    if chars.len() != cls.len() {
        return Err(Error::InternalInconsistency(
            "product table size mismatch".into(),
        ));
    }
    chars.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| y.values.cmp(&x.values))
    });
    let table = CharTable {
        group_id: p.id(),
        conductor,
        chars,
    };
    let strict = cls.len() <= 64;
    verify_orthogonality(p, &table, strict)?;
    Ok(table)
}
