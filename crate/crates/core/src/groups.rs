//! Finite groups by Cayley table, the regular representation, group
//! matrices M[s, t] = lambda(t^-1 s), canonical projections onto subgroup
//! invariants, and generic rank experiments for constrained log vectors.
//!
//! The two constraint families mirror the relation modules of unit
//! logarithms: "sum over cosets vanishes" (archimedean decomposition
//! subgroup) and "conjugation negates" (p-adic decomposition subgroup with a
//! central involution). Sampled vectors satisfy the relations exactly; the
//! experiments compare exact ranks of the resulting group matrices against
//! the predicted values and against the structural rank of the constrained
//! pencil.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::RatMatrix;
use crate::pencil::{structural_rank, MatrixPencil, RankMode};
use crate::rat::{random_rat, rat, Rat};

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub name: String,
    order: usize,
    labels: Vec<String>,
    /// table[a][b] = index of a * b
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a Cayley table. Associativity is checked on all
    /// triples for orders up to 24 and on seeded samples above.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup("one label per element required".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGroup("table is not n x n over 0..n".into()));
            }
        }
        // Latin square: every row and column a permutation
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if seen_row[table[i][j]] {
                    return Err(Error::InvalidGroup(format!("row {i} repeats a value")));
                }
                seen_row[table[i][j]] = true;
                if seen_col[table[j][i]] {
                    return Err(Error::InvalidGroup(format!("column {i} repeats a value")));
                }
                seen_col[table[j][i]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
            inverse[g] = inv;
        }
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xA550C);
            for _ in 0..4096 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            order: n,
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Subgroup test for a subset given as a duplicate-free list of element
    /// indices; duplicates or out-of-range indices fail (orders and coset
    /// counts depend on the set size).
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        if subset.iter().any(|&a| a >= self.order) {
            return false;
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return false;
        }
        if !subset.contains(&self.identity) {
            return false;
        }
        subset.iter().all(|&a| {
            subset.contains(&self.inverse[a])
                && subset.iter().all(|&b| subset.contains(&self.table[a][b]))
        })
    }

    pub fn is_central(&self, c: usize) -> bool {
        (0..self.order).all(|g| self.table[c][g] == self.table[g][c])
    }

    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| g != self.identity && self.table[g][g] == self.identity)
            .collect()
    }

    pub fn central_involutions(&self) -> Vec<usize> {
        self.involutions()
            .into_iter()
            .filter(|&g| self.is_central(g))
            .collect()
    }

    /// Left cosets g H in element order; returns (coset id per element,
    /// number of cosets).
    pub fn left_cosets(&self, subgroup: &[usize]) -> (Vec<usize>, usize) {
        let mut coset = vec![usize::MAX; self.order];
        let mut count = 0;
        for g in 0..self.order {
            if coset[g] != usize::MAX {
                continue;
            }
            for &h in subgroup {
                coset[self.table[g][h]] = count;
            }
            count += 1;
        }
        (coset, count)
    }
}

// ---------------------------------------------------------------------------
// constructors and catalog
// ---------------------------------------------------------------------------

pub fn cyclic(k: usize) -> FiniteGroup {
    let table = (0..k)
        .map(|i| (0..k).map(|j| (i + j) % k).collect())
        .collect();
    let labels = (0..k).map(|i| format!("g{i}")).collect();
    FiniteGroup::new(format!("C{k}"), labels, table).expect("cyclic table is a group")
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, name: impl Into<String>) -> FiniteGroup {
    let n = a.order() * b.order();
    let idx = |x: usize, y: usize| x * b.order() + y;
    let mut table = vec![vec![0usize; n]; n];
    for x1 in 0..a.order() {
        for y1 in 0..b.order() {
            for x2 in 0..a.order() {
                for y2 in 0..b.order() {
                    table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    let labels = (0..a.order())
        .flat_map(|x| (0..b.order()).map(move |y| format!("({},{})", x, y)))
        .collect();
    FiniteGroup::new(name, labels, table).expect("product table is a group")
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..k {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

fn perm_parity(p: &[usize]) -> bool {
    let mut swaps = 0;
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        swaps += len - 1;
    }
    swaps % 2 == 0
}

fn perm_group(name: &str, perms: Vec<Vec<usize>>) -> FiniteGroup {
    let index: std::collections::BTreeMap<Vec<usize>, usize> = perms
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let n = perms.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p q)(x) = p[q[x]]
            let composed: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
            table[i][j] = index[&composed];
        }
    }
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|v| v.to_string()).collect::<String>())
        .collect();
    FiniteGroup::new(name, labels, table).expect("permutation table is a group")
}

pub fn symmetric(k: usize) -> FiniteGroup {
    perm_group(&format!("S{k}"), permutations(k))
}

pub fn alternating4() -> FiniteGroup {
    let perms = permutations(4)
        .into_iter()
        .filter(|p| perm_parity(p))
        .collect();
    perm_group("A4", perms)
}

/// Dihedral group of order 2k: r^a s^b with s r = r^(-1) s.
pub fn dihedral(k: usize) -> FiniteGroup {
    let n = 2 * k;
    let idx = |a: usize, b: usize| a + k * b;
    let mut table = vec![vec![0usize; n]; n];
    for a1 in 0..k {
        for b1 in 0..2 {
            for a2 in 0..k {
                for b2 in 0..2 {
                    // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + (-1)^b1 a2) s^(b1+b2)
                    let a = if b1 == 0 {
                        (a1 + a2) % k
                    } else {
                        (a1 + k - a2 % k) % k
                    };
                    table[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
                }
            }
        }
    }
    let labels = (0..2)
        .flat_map(|b| {
            (0..k).map(move |a| {
                if b == 0 {
                    format!("r{a}")
                } else {
                    format!("sr{a}")
                }
            })
        })
        .collect::<Vec<_>>();
    // label order must match idx(a, b) = a + k b
    FiniteGroup::new(format!("D{k}"), labels, table).expect("dihedral table is a group")
}

/// Quaternion group {1, -1, i, -i, j, -j, k, -k}.
pub fn quaternion8() -> FiniteGroup {
    // encode g = (axis, sign): axis 0 = 1, 1 = i, 2 = j, 3 = k
    let mul_axis = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let idx = |axis: usize, neg: bool| axis * 2 + usize::from(neg);
    let mut table = vec![vec![0usize; 8]; 8];
    for a in 0..4 {
        for an in [false, true] {
            for b in 0..4 {
                for bn in [false, true] {
                    let (axis, flip) = mul_axis(a, b);
                    table[idx(a, an)][idx(b, bn)] = idx(axis, an ^ bn ^ flip);
                }
            }
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroup::new("Q8", names.iter().map(|s| s.to_string()).collect(), table)
        .expect("quaternion table is a group")
}

/// The shipped group catalog: cyclic C2..C12, the Klein group, S3, D4, Q8,
/// A4, S4, and the dihedral group of order 12.
pub fn catalog() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (2..=12).map(cyclic).collect();
    let c2 = cyclic(2);
    out.push(direct_product(&c2, &c2, "C2xC2"));
    out.push(symmetric(3));
    out.push(dihedral(4));
    out.push(quaternion8());
    out.push(alternating4());
    out.push(symmetric(4));
    out.push(dihedral(6));
    out
}

pub fn catalog_group(name: &str) -> Result<FiniteGroup> {
    catalog()
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| Error::Domain(format!("no catalog group named {name}")))
}

// ---------------------------------------------------------------------------
// representations and group matrices
// ---------------------------------------------------------------------------

/// Left-translation permutation matrix: rho(g)[a, b] = 1 iff a = g b.
/// Satisfies rho(g) rho(h) = rho(g h) and rho(e) = I.
pub fn regular_rep(g: &FiniteGroup, elem: usize) -> Result<RatMatrix> {
    if elem >= g.order() {
        return Err(Error::Domain(format!("no element {elem}")));
    }
    let n = g.order();
    let mut m = RatMatrix::zeros(n, n);
    for b in 0..n {
        *m.at_mut(g.mul(elem, b), b) = rat(1, 1);
    }
    Ok(m)
}

/// Right-translation permutation matrix: R(g)[a, b] = 1 iff a = b g. These
/// are the matrices that assemble a group matrix as sum_g lambda(g) R(g).
pub fn right_translation(g: &FiniteGroup, elem: usize) -> Result<RatMatrix> {
    if elem >= g.order() {
        return Err(Error::Domain(format!("no element {elem}")));
    }
    let n = g.order();
    let mut m = RatMatrix::zeros(n, n);
    for b in 0..n {
        *m.at_mut(g.mul(b, elem), b) = rat(1, 1);
    }
    Ok(m)
}

/// Group matrix with entries M[s, t] = lambda(t^-1 s); equivalently
/// sum_g lambda(g) R(g) over the right translations.
pub fn group_matrix(g: &FiniteGroup, lambda: &[Rat]) -> Result<RatMatrix> {
    if lambda.len() != g.order() {
        return Err(Error::Shape(
            "lambda must assign one value per element".into(),
        ));
    }
    let n = g.order();
    let mut m = RatMatrix::zeros(n, n);
    for s in 0..n {
        for t in 0..n {
            *m.at_mut(s, t) = lambda[g.mul(g.inv(t), s)].clone();
        }
    }
    Ok(m)
}

/// Group-algebra convolution (mu * lambda)(g) = sum_h mu(h) lambda(h^-1 g),
/// the composition law of group matrices: M(lambda) M(mu) = M(mu * lambda).
pub fn convolution(g: &FiniteGroup, mu: &[Rat], lambda: &[Rat]) -> Result<Vec<Rat>> {
    if mu.len() != g.order() || lambda.len() != g.order() {
        return Err(Error::Shape("convolution arity mismatch".into()));
    }
    Ok((0..g.order())
        .map(|out| {
            (0..g.order())
                .map(|h| &mu[h] * &lambda[g.mul(g.inv(h), out)])
                .fold(Rat::zero(), |a, b| a + b)
        })
        .collect())
}

/// Canonical projection onto the subgroup invariants of the regular module:
/// (1/|H|) sum_{c in H} rho(c). Idempotent of rank n/|H|.
pub fn projection_plus(g: &FiniteGroup, subgroup: &[usize]) -> Result<RatMatrix> {
    if !g.is_subgroup(subgroup) {
        return Err(Error::Precondition("subset is not a subgroup".into()));
    }
    let n = g.order();
    let mut acc = RatMatrix::zeros(n, n);
    for &c in subgroup {
        acc = acc.add(&regular_rep(g, c)?)?;
    }
    Ok(acc.scale(&rat(1, subgroup.len() as i64)))
}

// ---------------------------------------------------------------------------
// constrained log vectors and rank experiments
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    /// Constant on left cosets of H, coset values summing to zero.
    Leopoldt,
    /// Constant on left cosets of H, negated by a central involution.
    Gross,
}

/// A mock logarithm vector: generic rational values subject exactly to the
/// relation module of its kind.
#[derive(Debug, Clone)]
pub struct LogVector {
    pub kind: ConstraintKind,
    pub values: Vec<Rat>,
}

fn check_leopoldt_inputs(g: &FiniteGroup, subgroup: &[usize]) -> Result<()> {
    if !g.is_subgroup(subgroup) {
        return Err(Error::Precondition("H is not a subgroup".into()));
    }
    if subgroup.len() > 2 {
        return Err(Error::Precondition(format!(
            "archimedean decomposition subgroups have order 1 or 2, got {}",
            subgroup.len()
        )));
    }
    Ok(())
}

fn check_gross_inputs(g: &FiniteGroup, subgroup: &[usize], conj: usize) -> Result<()> {
    if !g.is_subgroup(subgroup) {
        return Err(Error::Precondition("H is not a subgroup".into()));
    }
    if conj >= g.order() || conj == g.identity() || g.mul(conj, conj) != g.identity() {
        return Err(Error::Precondition("c must be an involution".into()));
    }
    if !g.is_central(conj) {
        return Err(Error::Precondition("c must be central".into()));
    }
    if subgroup.contains(&conj) {
        return Err(Error::Precondition("c must lie outside H".into()));
    }
    Ok(())
}

/// Predicted generic rank: n/|H| - 1 for the coset-sum-zero family, and
/// n/(2 |H|) for the conjugation-negated family.
pub fn predicted_rank(
    g: &FiniteGroup,
    kind: ConstraintKind,
    subgroup: &[usize],
    conj: Option<usize>,
) -> Result<usize> {
    match kind {
        ConstraintKind::Leopoldt => {
            check_leopoldt_inputs(g, subgroup)?;
            Ok(g.order() / subgroup.len() - 1)
        }
        ConstraintKind::Gross => {
            let c = conj
                .ok_or_else(|| Error::Precondition("the conjugation element is required".into()))?;
            check_gross_inputs(g, subgroup, c)?;
            Ok(g.order() / (2 * subgroup.len()))
        }
    }
}

/// Basis of the constraint module, one indicator-style lambda per free
/// coordinate.
fn constraint_basis(
    g: &FiniteGroup,
    kind: ConstraintKind,
    subgroup: &[usize],
    conj: Option<usize>,
) -> Result<Vec<Vec<Rat>>> {
    let (coset, q) = g.left_cosets(subgroup);
    let lift = |per_coset: &[Rat]| -> Vec<Rat> {
        (0..g.order())
            .map(|e| per_coset[coset[e]].clone())
            .collect()
    };
    match kind {
        ConstraintKind::Leopoldt => {
            check_leopoldt_inputs(g, subgroup)?;
            let mut basis = Vec::new();
            for i in 0..q - 1 {
                let mut per = vec![Rat::zero(); q];
                per[i] = rat(1, 1);
                per[q - 1] = rat(-1, 1);
                basis.push(lift(&per));
            }
            Ok(basis)
        }
        ConstraintKind::Gross => {
            let c = conj
                .ok_or_else(|| Error::Precondition("the conjugation element is required".into()))?;
            check_gross_inputs(g, subgroup, c)?;
            // pair each coset with its image under left multiplication by c
            let mut partner = vec![usize::MAX; q];
            for e in 0..g.order() {
                partner[coset[e]] = coset[g.mul(c, e)];
            }
            let mut basis = Vec::new();
            for i in 0..q {
                if i < partner[i] {
                    let mut per = vec![Rat::zero(); q];
                    per[i] = rat(1, 1);
                    per[partner[i]] = rat(-1, 1);
                    basis.push(lift(&per));
                } else if i == partner[i] {
                    return Err(Error::Internal(
                        "central involution fixes a coset despite lying outside H".into(),
                    ));
                }
            }
            Ok(basis)
        }
    }
}

/// Generic sample from the constraint module: random rational coordinates
/// on the basis above. The constraints hold exactly by construction and are
/// re-verified.
pub fn sample_log_vector(
    g: &FiniteGroup,
    kind: ConstraintKind,
    subgroup: &[usize],
    conj: Option<usize>,
    rng: &mut ChaCha8Rng,
) -> Result<LogVector> {
    let basis = constraint_basis(g, kind, subgroup, conj)?;
    let mut values = vec![Rat::zero(); g.order()];
    for vec in &basis {
        // small denominators keep the cleared integer entries tame during
        // elimination without hurting genericity
        let coeff = random_rat(rng, 1_000_000, 16);
        for (slot, v) in values.iter_mut().zip(vec) {
            *slot += v * &coeff;
        }
    }
    let lv = LogVector { kind, values };
    verify_log_vector(g, &lv, subgroup, conj)?;
    Ok(lv)
}

/// Exact re-check of the relation module.
pub fn verify_log_vector(
    g: &FiniteGroup,
    lv: &LogVector,
    subgroup: &[usize],
    conj: Option<usize>,
) -> Result<()> {
    let (coset, q) = g.left_cosets(subgroup);
    for e in 0..g.order() {
        for &h in subgroup {
            if lv.values[g.mul(e, h)] != lv.values[e] {
                return Err(Error::Internal("lambda is not constant on cosets".into()));
            }
        }
    }
    match lv.kind {
        ConstraintKind::Leopoldt => {
            let mut reps = vec![None; q];
            for e in 0..g.order() {
                if reps[coset[e]].is_none() {
                    reps[coset[e]] = Some(e);
                }
            }
            let total: Rat = reps
                .iter()
                .map(|r| lv.values[r.unwrap()].clone())
                .fold(Rat::zero(), |a, b| a + b);
            if !total.is_zero() {
                return Err(Error::Internal("coset sums do not vanish".into()));
            }
        }
        ConstraintKind::Gross => {
            let c = conj.unwrap();
            for e in 0..g.order() {
                let lhs = &lv.values[g.mul(c, e)];
                if *lhs != -lv.values[e].clone() {
                    return Err(Error::Internal("conjugation does not negate lambda".into()));
                }
            }
        }
    }
    Ok(())
}

/// Outcome of a generic rank experiment over one (group, subgroup[, c])
/// configuration.
#[derive(Debug, Clone)]
pub struct RankExperimentReport {
    pub group: String,
    pub kind: ConstraintKind,
    pub subgroup: Vec<usize>,
    pub conjugation: Option<usize>,
    pub predicted: usize,
    pub structural: usize,
    pub structural_exact: bool,
    pub trial_ranks: Vec<usize>,
    pub pass: bool,
}

/// Runs `trials` generic samples, computes every exact rank, computes the
/// structural rank of the constrained pencil (exact within the caps, else
/// seeded randomized), and compares everything with the predicted value.
pub fn rank_experiment(
    g: &FiniteGroup,
    kind: ConstraintKind,
    subgroup: &[usize],
    conj: Option<usize>,
    trials: u32,
    seed: u64,
    limits: &Limits,
) -> Result<RankExperimentReport> {
    let predicted = predicted_rank(g, kind, subgroup, conj)?;
    let basis = constraint_basis(g, kind, subgroup, conj)?;
    let structural = if basis.is_empty() {
        // trivial module (e.g. H = G): the zero pencil
        crate::pencil::StructuralRank {
            rank: 0,
            exact: true,
            trials: 0,
            per_trial_error: 0.0,
            confidence: 1.0,
        }
    } else {
        let components: Vec<(String, RatMatrix)> = basis
            .iter()
            .enumerate()
            .map(|(i, lam)| Ok((format!("y{i}"), group_matrix(g, lam)?)))
            .collect::<Result<_>>()?;
        let pencil = MatrixPencil::new(g.order(), g.order(), components)?;
        let exact_ok = basis.len() <= limits.exact_max_symbols && g.order() <= limits.exact_max_dim;
        let mode = if exact_ok {
            RankMode::Exact
        } else {
            RankMode::Randomized {
                seed: seed ^ 0x57AB,
                trials: 6,
            }
        };
        structural_rank(&pencil, mode, limits)?
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trial_ranks = Vec::with_capacity(trials as usize);
    for _ in 0..trials {
        let lv = sample_log_vector(g, kind, subgroup, conj, &mut rng)?;
        trial_ranks.push(group_matrix(g, &lv.values)?.rank());
    }
    let pass = structural.rank == predicted && trial_ranks.iter().all(|&r| r == predicted);
    Ok(RankExperimentReport {
        group: g.name.clone(),
        kind,
        subgroup: subgroup.to_vec(),
        conjugation: conj,
        predicted,
        structural: structural.rank,
        structural_exact: structural.exact,
        trial_ranks,
        pass,
    })
}
