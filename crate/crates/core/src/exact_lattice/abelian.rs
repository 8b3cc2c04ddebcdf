//! Finitely generated abelian groups, presentations and homomorphisms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{integer_kernel, smith_diagonal, snf, solve_rational};
use super::sublattice::{quotient_of, SubLattice};
use crate::error::{Error, Result};

/// Isomorphism type `Z^free ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... ` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbGroup {
    /// Normalizes arbitrary cyclic orders into invariant factors. Zero orders
    /// count as free summands, unit orders vanish.
    pub fn new(free_rank: usize, orders: Vec<BigInt>) -> Self {
        let mut free = free_rank;
        let finite: Vec<BigInt> = orders
            .into_iter()
            .filter_map(|d| {
                if d.is_zero() {
                    free += 1;
                    None
                } else {
                    Some(d.abs())
                }
            })
            .collect();
        let invariant_factors = smith_diagonal(&IntMatrix::diagonal(&finite))
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        FgAbGroup {
            free_rank: free,
            invariant_factors,
        }
    }

    pub fn trivial() -> Self {
        FgAbGroup::new(0, vec![])
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup::new(rank, vec![])
    }

    pub fn cyclic(order: u64) -> Self {
        FgAbGroup::new(0, vec![BigInt::from(order)])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion_order())
    }

    pub fn min_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.min_generators() <= 1
    }

    pub fn is_trivial(&self) -> bool {
        self.min_generators() == 0
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        FgAbGroup::new(self.free_rank + other.free_rank, orders)
    }

    /// The standard presentation by one generator per summand.
    pub fn presentation(&self) -> Presentation {
        let gens = self.min_generators();
        let mut rel = IntMatrix::zeros(gens, self.invariant_factors.len());
        for (k, d) in self.invariant_factors.iter().enumerate() {
            rel[(self.free_rank + k, k)] = d.clone();
        }
        Presentation::new(gens, rel)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Z^gens / (columns of relations)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    gens: usize,
    relations: IntMatrix,
    relation_lattice: SubLattice,
    group: FgAbGroup,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.relation_lattice == other.relation_lattice
    }
}

impl Presentation {
    pub fn new(gens: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.rows(), gens, "relation matrix must have one row per generator");
        let group = quotient_of(gens, &relations);
        Presentation {
            gens,
            relation_lattice: SubLattice::new(relations.clone()),
            relations,
            group,
        }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.relation_lattice.contains(x)
    }

    pub fn same_element(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&d)
    }

    /// Canonical representative of the class of `x`.
    pub fn normalize(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.relation_lattice.reduce(x)
    }

    /// Smith coordinates: returns `(U, U^{-1}, d)` with the group isomorphic to
    /// `⊕ Z/d_i` where `y = U x` are the coordinates of ambient vector `x`
    /// (`d_i = 0` marks a free coordinate).
    fn smith_coordinates(&self) -> (IntMatrix, IntMatrix, Vec<BigInt>) {
        let (s, u, _) = snf(&self.relations);
        let mut d = vec![BigInt::zero(); self.gens];
        for (i, di) in d.iter_mut().enumerate().take(self.relations.cols().min(self.gens)) {
            *di = s[(i, i)].clone();
        }
        let inv = unimodular_inverse(&u);
        (u, inv, d)
    }

    /// Ambient representatives of all elements, or `None` for an infinite group.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        self.group.order()?;
        let (_, inv, d) = self.smith_coordinates();
        let mut out = vec![vec![BigInt::zero(); self.gens]];
        for (i, di) in d.iter().enumerate() {
            if di.is_one() {
                continue;
            }
            let basis = inv.column(i);
            let n = di.to_u64()?;
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for base in &out {
                for c in 0..n {
                    let c = BigInt::from(c);
                    next.push(base.iter().zip(&basis).map(|(b, e)| b + &c * e).collect());
                }
            }
            out = next;
        }
        Some(out)
    }

    /// Ambient vectors of a minimal generating system, paired with their orders
    /// (`0` for infinite order).
    pub fn cyclic_decomposition(&self) -> Vec<(Vec<BigInt>, BigInt)> {
        let (_, inv, d) = self.smith_coordinates();
        d.iter()
            .enumerate()
            .filter(|(_, di)| !di.is_one())
            .map(|(i, di)| (inv.column(i), di.clone()))
            .collect()
    }

    /// Coordinates of ambient generator `j` in the cyclic decomposition returned above.
    fn decomposition_coordinates(&self) -> IntMatrix {
        let (u, _, d) = self.smith_coordinates();
        let keep: Vec<usize> = (0..d.len()).filter(|&i| !d[i].is_one()).collect();
        u.select_rows(&keep)
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        let mut rel = IntMatrix::zeros(self.gens + other.gens, self.relations.cols() + other.relations.cols());
        for i in 0..self.gens {
            for j in 0..self.relations.cols() {
                rel[(i, j)] = self.relations[(i, j)].clone();
            }
        }
        for i in 0..other.gens {
            for j in 0..other.relations.cols() {
                rel[(self.gens + i, self.relations.cols() + j)] = other.relations[(i, j)].clone();
            }
        }
        Presentation::new(self.gens + other.gens, rel)
    }
}

fn unimodular_inverse(u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            solve_rational(u, &e)
                .expect("unimodular matrix is invertible")
                .into_iter()
                .map(|q: BigRational| {
                    debug_assert!(q.is_integer());
                    q.to_integer()
                })
                .collect()
        })
        .collect();
    IntMatrix::from_columns(n, &cols)
}

/// Homomorphism between presented groups, given by the images of the source
/// generators (columns of `matrix`, written in target generators).
#[derive(Clone, Debug)]
pub struct GroupMap {
    source: Presentation,
    target: Presentation,
    matrix: IntMatrix,
}

impl GroupMap {
    pub fn new(source: Presentation, target: Presentation, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.gens || matrix.cols() != source.gens {
            return Err(Error::DimensionMismatch {
                expected: target.gens * source.gens,
                found: matrix.rows() * matrix.cols(),
            });
        }
        let images = &matrix * &source.relations;
        for j in 0..images.cols() {
            if !target.is_zero_element(&images.column(j)) {
                return Err(Error::IllDefinedMap(format!(
                    "relation {j} of the source does not map to zero"
                )));
            }
        }
        Ok(GroupMap { source, target, matrix })
    }

    pub fn identity(p: &Presentation) -> Self {
        GroupMap {
            source: p.clone(),
            target: p.clone(),
            matrix: IntMatrix::identity(p.gens),
        }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMap) -> Result<GroupMap> {
        if other.source != self.target {
            return Err(Error::Precondition("composing maps with mismatched groups".into()));
        }
        Ok(GroupMap {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: &other.matrix * &self.matrix,
        })
    }

    /// Equality as homomorphisms (images agree modulo target relations).
    pub fn same_map(&self, other: &GroupMap) -> bool {
        self.source == other.source
            && self.target == other.target
            && (0..self.source.gens)
                .all(|j| self.target.same_element(&self.matrix.column(j), &other.matrix.column(j)))
    }

    pub fn cokernel(&self) -> FgAbGroup {
        quotient_of(self.target.gens, &self.matrix.hstack(&self.target.relations))
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn kernel(&self) -> FgAbGroup {
        let m = self.source.gens;
        let k = integer_kernel(&self.matrix.hstack(&self.target.relations));
        let top: Vec<usize> = (0..m).collect();
        let preimage = SubLattice::new(k.select_rows(&top));
        preimage
            .relative_quotient(&SubLattice::new(self.source.relations.clone()))
            .expect("source relations lie in the preimage of zero")
    }

    pub fn kernel_is_cyclic(&self) -> bool {
        self.kernel().is_cyclic()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_surjective() && self.kernel().is_trivial()
    }
}

pub fn map_kernel(f: &GroupMap) -> FgAbGroup {
    f.kernel()
}

pub fn map_is_surjective(f: &GroupMap) -> bool {
    f.is_surjective()
}

pub fn kernel_is_cyclic(f: &GroupMap) -> bool {
    f.kernel_is_cyclic()
}

/// Pushout `D = (B ⊕ C) / ⟨(f(a), -g(a))⟩` of a span `B <-f- A -g-> C`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub presentation: Presentation,
    pub group: FgAbGroup,
    pub in_b: GroupMap,
    pub in_c: GroupMap,
}

pub fn pushout(f: &GroupMap, g: &GroupMap) -> Result<Pushout> {
    if f.source != g.source {
        return Err(Error::Precondition("pushout of maps with different sources".into()));
    }
    let b = &f.target;
    let c = &g.target;
    let n = b.gens + c.gens;
    let a_gens = f.source.gens;
    let mut rel = IntMatrix::zeros(n, b.relations.cols() + c.relations.cols() + a_gens);
    for i in 0..b.gens {
        for j in 0..b.relations.cols() {
            rel[(i, j)] = b.relations[(i, j)].clone();
        }
    }
    let off = b.relations.cols();
    for i in 0..c.gens {
        for j in 0..c.relations.cols() {
            rel[(b.gens + i, off + j)] = c.relations[(i, j)].clone();
        }
    }
    let off = off + c.relations.cols();
    for a in 0..a_gens {
        for i in 0..b.gens {
            rel[(i, off + a)] = f.matrix[(i, a)].clone();
        }
        for i in 0..c.gens {
            rel[(b.gens + i, off + a)] = -g.matrix[(i, a)].clone();
        }
    }
    let d = Presentation::new(n, rel);
    let mut ib = IntMatrix::zeros(n, b.gens);
    for i in 0..b.gens {
        ib[(i, i)] = BigInt::one();
    }
    let mut ic = IntMatrix::zeros(n, c.gens);
    for i in 0..c.gens {
        ic[(b.gens + i, i)] = BigInt::one();
    }
    let in_b = GroupMap::new(b.clone(), d.clone(), ib)?;
    let in_c = GroupMap::new(c.clone(), d.clone(), ic)?;
    Ok(Pushout {
        group: d.group().clone(),
        presentation: d,
        in_b,
        in_c,
    })
}

/// Upper bound on the number of candidate maps `all_homs` is willing to list.
const MAX_CANDIDATES: usize = 1 << 20;

/// Every homomorphism `source -> target`. Finite when the target is finite;
/// for an infinite target only the surjective maps out of a cyclic source are
/// listed (there are finitely many), and anything else is not enumerable.
pub fn surjections_with_cyclic_kernel(source: &Presentation, target: &Presentation) -> Result<Vec<GroupMap>> {
    let candidates = candidate_homs(source, target)?;
    Ok(candidates
        .into_iter()
        .filter(|f| f.is_surjective() && f.kernel_is_cyclic())
        .collect())
}

fn candidate_homs(source: &Presentation, target: &Presentation) -> Result<Vec<GroupMap>> {
    let decomposition = source.cyclic_decomposition();
    let coords = source.decomposition_coordinates();

    // images allowed for each cyclic summand of the source
    let mut choices: Vec<Vec<Vec<BigInt>>> = Vec::new();
    match target.elements() {
        Some(elements) => {
            for (_, order) in &decomposition {
                let ok: Vec<Vec<BigInt>> = elements
                    .iter()
                    .filter(|x| {
                        let scaled: Vec<BigInt> = x.iter().map(|v| v * order).collect();
                        target.is_zero_element(&scaled)
                    })
                    .cloned()
                    .collect();
                choices.push(ok);
            }
        }
        None => {
            if decomposition.len() > 1 {
                return Err(Error::NotEnumerable);
            }
            let tg = target.group();
            let target_is_z = tg.free_rank() == 1 && tg.invariant_factors().is_empty();
            let source_is_z = decomposition.len() == 1 && decomposition[0].1.is_zero();
            if !(target_is_z && source_is_z) {
                // a cyclic group surjects onto an infinite group only if both are Z
                return Ok(Vec::new());
            }
            let gen = target.cyclic_decomposition()[0].0.clone();
            let neg: Vec<BigInt> = gen.iter().map(|v| -v).collect();
            choices.push(vec![gen, neg]);
        }
    }
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len().max(1)));
    if total.is_none_or(|t| t > MAX_CANDIDATES) {
        return Err(Error::NotEnumerable);
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    if choices.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        // image of ambient generator j = sum_i coords[i][j] * image(summand i)
        let mut m = IntMatrix::zeros(target.gens, source.gens);
        for j in 0..source.gens {
            for (i, choice) in choices.iter().enumerate() {
                let c = &coords[(i, j)];
                if c.is_zero() {
                    continue;
                }
                for (r, v) in choice[idx[i]].iter().enumerate() {
                    m[(r, j)] += c * v;
                }
            }
        }
        for j in 0..source.gens {
            let col = target.normalize(&m.column(j));
            for (r, v) in col.into_iter().enumerate() {
                m[(r, j)] = v;
            }
        }
        out.push(GroupMap::new(source.clone(), target.clone(), m)?);

        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Number of homomorphisms `G -> Z/n` computed from invariant factors.
pub fn hom_count_to_cyclic(g: &FgAbGroup, n: u64) -> BigInt {
    let n = BigInt::from(n);
    let mut count = num_traits::pow(n.clone(), g.free_rank());
    for d in g.invariant_factors() {
        count *= d.gcd(&n);
    }
    count
}
