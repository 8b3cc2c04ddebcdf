//! Finite semimatroids and locally ranked triples.
//!
//! Central sets and their ranks are stored in a dense table indexed by the
//! subset bit mask, so every operation here is exponential in the ground size.
//! Ground sets larger than [`MAX_GROUND`] are rejected.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_lattice::normal_form::solve_rational_rhs;
use crate::exact_lattice::IntMatrix;
use crate::geomsl::FinitePoset;
use crate::poly::BivariatePoly;
use crate::report::Report;
use crate::subset::{format_set, Subset, MAX_GROUND};

const NOT_CENTRAL: u8 = u8::MAX;

/// Ground labels, a simplicial complex of central sets and their ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocallyRankedTriple {
    labels: Vec<String>,
    ranks: Vec<u8>,
}

/// Disjoint `(R, F, T)` whose union is central and whose rank grows exactly
/// along `F` over the interval `[R, R ∪ F ∪ T]`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Molecule {
    pub r: Subset,
    pub f: Subset,
    pub t: Subset,
}

impl Molecule {
    pub fn top(&self) -> Subset {
        self.r.union(self.f).union(self.t)
    }
}

/// Internally and externally active elements of a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Activities {
    pub internal: Subset,
    pub external: Subset,
}

fn check_ground(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_GROUND {
        return Err(Error::GroundTooLarge(labels.len(), MAX_GROUND));
    }
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::InvalidInput(format!("duplicate ground label {l:?}")));
        }
    }
    Ok(())
}

impl LocallyRankedTriple {
    /// Builds a triple from explicitly listed central sets. The family must
    /// be a simplicial complex containing the empty set and every singleton.
    pub fn new(labels: Vec<String>, central: &[(Subset, usize)]) -> Result<Self> {
        check_ground(&labels)?;
        let n = labels.len();
        let mut ranks = vec![NOT_CENTRAL; 1 << n];
        for &(s, r) in central {
            if !s.is_subset(Subset::full(n)) {
                return Err(Error::InvalidInput(format!("central set {s:?} leaves the ground set")));
            }
            if r >= NOT_CENTRAL as usize {
                return Err(Error::InvalidInput(format!("rank {r} too large")));
            }
            let slot = &mut ranks[s.bits() as usize];
            if *slot != NOT_CENTRAL && *slot as usize != r {
                return Err(Error::InvalidInput(format!(
                    "set {} listed with ranks {} and {r}",
                    format_set(&labels, s),
                    *slot
                )));
            }
            *slot = r as u8;
        }
        let t = LocallyRankedTriple { labels, ranks };
        t.check_complex()?;
        Ok(t)
    }

    /// Every subset central, ranked by `rank`.
    pub fn matroid(labels: Vec<String>, rank: impl Fn(Subset) -> usize) -> Result<Self> {
        check_ground(&labels)?;
        let n = labels.len();
        let ranks = Subset::full(n)
            .subsets()
            .map(|s| rank(s).min(NOT_CENTRAL as usize - 1) as u8)
            .collect::<Vec<_>>();
        // subsets() of the full set enumerates masks in increasing order
        Ok(LocallyRankedTriple { labels, ranks })
    }

    /// The semimatroid of the affine hyperplanes `a_i · x = b_i`, with normals
    /// given as columns: a set is central when its hyperplanes meet.
    pub fn from_affine(labels: Vec<String>, normals: &IntMatrix, offsets: &[BigRational]) -> Result<Self> {
        check_ground(&labels)?;
        let n = labels.len();
        if normals.cols() != n || offsets.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: normals.cols(),
            });
        }
        let mut central = Vec::new();
        for s in Subset::full(n).subsets() {
            let idx: Vec<usize> = s.iter().collect();
            let at = normals.select_columns(&idx).transpose();
            let rhs: Vec<BigRational> = idx.iter().map(|&i| offsets[i].clone()).collect();
            if solve_rational_rhs(&at, &rhs).is_some() {
                central.push((s, at.rank()));
            }
        }
        Self::new(labels, &central)
    }

    fn check_complex(&self) -> Result<()> {
        if !self.is_central(Subset::EMPTY) {
            return Err(Error::InvalidInput("the empty set must be central".into()));
        }
        if self.ranks[0] != 0 {
            return Err(Error::InvalidInput("the empty set must have rank 0".into()));
        }
        for i in 0..self.n() {
            if !self.is_central(Subset::singleton(i)) {
                return Err(Error::InvalidInput(format!("singleton {{{}}} is not central", self.labels[i])));
            }
        }
        for s in self.central_sets() {
            for i in s.iter() {
                if !self.is_central(s.without(i)) {
                    return Err(Error::InvalidInput(format!(
                        "central family is not a simplicial complex: {} is central but {} is not",
                        self.fmt_set(s),
                        self.fmt_set(s.without(i))
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn subset_of(&self, labels: &[impl AsRef<str>]) -> Result<Subset> {
        labels.iter().try_fold(Subset::EMPTY, |s, l| {
            self.index_of(l.as_ref())
                .map(|i| s.with(i))
                .ok_or_else(|| Error::InvalidInput(format!("unknown label {:?}", l.as_ref())))
        })
    }

    pub fn fmt_set(&self, s: Subset) -> String {
        format_set(&self.labels, s)
    }

    pub fn is_central(&self, s: Subset) -> bool {
        self.ranks.get(s.bits() as usize).is_some_and(|&r| r != NOT_CENTRAL)
    }

    pub fn rank(&self, s: Subset) -> Option<usize> {
        self.ranks
            .get(s.bits() as usize)
            .and_then(|&r| (r != NOT_CENTRAL).then_some(r as usize))
    }

    fn rk(&self, s: Subset) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    /// Central sets in increasing bit-mask order (so subsets come first).
    pub fn central_sets(&self) -> impl Iterator<Item = Subset> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != NOT_CENTRAL)
            .map(|(s, _)| Subset(s as u32))
    }

    pub fn central_count(&self) -> usize {
        self.ranks.iter().filter(|&&r| r != NOT_CENTRAL).count()
    }

    /// Rank of the triple: the largest rank of a central set.
    pub fn total_rank(&self) -> usize {
        self.central_sets().map(|s| self.rk(s)).max().unwrap_or(0)
    }

    pub fn is_matroid(&self) -> bool {
        self.ranks.iter().all(|&r| r != NOT_CENTRAL)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank(s) == Some(s.len())
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        (0..self.n()).all(|i| self.rk(Subset::singleton(i)) == 1)
            && (0..self.n()).all(|i| {
                (i + 1..self.n()).all(|j| self.rank(Subset::from_indices([i, j])).is_none_or(|r| r == 2))
            })
    }

    /// Violations of (R1), (R2) and (R3). Monotonicity and submodularity are
    /// tested on covers `X ⊂ X ∪ x` and on squares `X, X ∪ x, X ∪ y, X ∪ {x, y}`
    /// of central sets; because the family is a complex, this local form is
    /// equivalent to the global statements.
    pub fn check_locally_ranked(&self) -> Report {
        let mut rep = Report::new();
        for s in self.central_sets() {
            let r = self.rk(s);
            if r > s.len() {
                rep.push("R1", format!("rk({})={} exceeds |X|={}", self.fmt_set(s), r, s.len()));
            }
            for i in s.iter() {
                let sub = s.without(i);
                if self.rk(sub) > r {
                    rep.push(
                        "R2",
                        format!(
                            "rk({})={} > rk({})={}",
                            self.fmt_set(sub),
                            self.rk(sub),
                            self.fmt_set(s),
                            r
                        ),
                    );
                }
            }
            let elems: Vec<usize> = s.iter().collect();
            for (a, &x) in elems.iter().enumerate() {
                for &y in &elems[a + 1..] {
                    let base = s.without(x).without(y);
                    let lhs = r + self.rk(base);
                    let rhs = self.rk(base.with(x)) + self.rk(base.with(y));
                    if lhs > rhs {
                        rep.push(
                            "R3",
                            format!(
                                "rk({}) + rk({}) > rk({}) + rk({})",
                                self.fmt_set(s),
                                self.fmt_set(base),
                                self.fmt_set(base.with(x)),
                                self.fmt_set(base.with(y))
                            ),
                        );
                    }
                }
            }
        }
        rep
    }

    /// Violations of (CR1), (CR2) and their strengthened forms (CR1'), (CR2').
    /// Runs over all ordered pairs of central sets.
    pub fn check_semimatroid(&self) -> Report {
        let mut rep = Report::new();
        let sets: Vec<Subset> = self.central_sets().collect();
        for &x in &sets {
            let rx = self.rk(x);
            for &y in &sets {
                let ry = self.rk(y);
                let meet = x.intersection(y);
                if rx == self.rk(meet) {
                    let join = x.union(y);
                    match self.rank(join) {
                        None => rep.push(
                            "CR1",
                            format!(
                                "X={}, Y={}: rk(X)=rk(X∩Y)={} but X∪Y={} is not central",
                                self.fmt_set(x),
                                self.fmt_set(y),
                                rx,
                                self.fmt_set(join)
                            ),
                        ),
                        Some(rj) if rj != ry => rep.push(
                            "CR1'",
                            format!(
                                "X={}, Y={}: rk(X∪Y)={} differs from rk(Y)={}",
                                self.fmt_set(x),
                                self.fmt_set(y),
                                rj,
                                ry
                            ),
                        ),
                        _ => {}
                    }
                }
                if rx < ry {
                    let candidates = y.difference(x);
                    let central = candidates.iter().any(|e| self.is_central(x.with(e)));
                    let raising = candidates
                        .iter()
                        .any(|e| self.rank(x.with(e)) == Some(rx + 1));
                    if !central {
                        rep.push(
                            "CR2",
                            format!(
                                "X={}, Y={}: no y in Y-X with X∪y central",
                                self.fmt_set(x),
                                self.fmt_set(y)
                            ),
                        );
                    } else if !raising {
                        rep.push(
                            "CR2'",
                            format!(
                                "X={}, Y={}: no y in Y-X with X∪y central of rank {}",
                                self.fmt_set(x),
                                self.fmt_set(y),
                                rx + 1
                            ),
                        );
                    }
                }
            }
        }
        rep
    }

    /// Both reports combined.
    pub fn validate(&self) -> Report {
        let mut rep = self.check_locally_ranked();
        rep.extend(self.check_semimatroid());
        rep
    }

    fn require_central(&self, s: Subset) -> Result<usize> {
        self.rank(s)
            .ok_or_else(|| Error::Precondition(format!("{} is not central", self.fmt_set(s))))
    }

    /// `{x : X ∪ x central and rk(X ∪ x) = rk(X)}`.
    pub fn closure(&self, x: Subset) -> Result<Subset> {
        let r = self.require_central(x)?;
        Ok((0..self.n())
            .filter(|&e| self.rank(x.with(e)) == Some(r))
            .fold(x, |acc, e| acc.with(e)))
    }

    pub fn flats(&self) -> Vec<Subset> {
        self.central_sets()
            .filter(|&s| self.closure(s).expect("central") == s)
            .collect()
    }

    /// The flats ordered by inclusion, labelled by their element lists.
    pub fn flats_poset(&self) -> FinitePoset {
        let flats = self.flats();
        let labels = flats.iter().map(|&f| self.fmt_set(f)).collect();
        let ranks = flats.iter().map(|&f| self.rk(f)).collect();
        FinitePoset::from_order(labels, Some(ranks), |a, b| flats[a].is_subset(flats[b]))
    }

    /// Keeps the elements of `keep`, with ranks and centrality given by `f`
    /// on subsets of the original ground.
    fn restricted(&self, keep: Subset, f: impl Fn(Subset) -> Option<usize>) -> LocallyRankedTriple {
        let idx: Vec<usize> = keep.iter().collect();
        let m = idx.len();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let ranks = Subset::full(m)
            .subsets()
            .map(|s| {
                let orig = Subset::from_indices(s.iter().map(|j| idx[j]));
                f(orig).map_or(NOT_CENTRAL, |r| r as u8)
            })
            .collect();
        LocallyRankedTriple { labels, ranks }
    }

    /// Removes the elements of `t`; central sets are those avoiding `t`.
    pub fn delete(&self, t: Subset) -> LocallyRankedTriple {
        self.restricted(self.ground().difference(t), |s| self.rank(s))
    }

    /// Contraction by a central set `x`: the new ground is `{a ∉ X : X ∪ a central}`,
    /// a set `Y` is central when `Y ∪ X` is, with rank `rk(Y ∪ X) - rk(X)`.
    pub fn contract(&self, x: Subset) -> Result<LocallyRankedTriple> {
        let rx = self.require_central(x)?;
        let keep = (0..self.n())
            .filter(|&a| !x.contains(a) && self.is_central(x.with(a)))
            .fold(Subset::EMPTY, |s, a| s.with(a));
        Ok(self.restricted(keep, |s| self.rank(s.union(x)).map(|r| r - rx)))
    }

    /// `Σ_{X central} (x-1)^{r - rk X} (y-1)^{|X| - rk X}`.
    pub fn tutte(&self) -> BivariatePoly {
        let r = self.total_rank();
        let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
        for s in self.central_sets() {
            let rk = self.rk(s);
            *counts.entry(((r - rk) as u32, (s.len() - rk) as u32)).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((a, b), c)| BivariatePoly::shifted_monomial(a, b).scale(&BigInt::from(c)))
            .sum()
    }

    /// Central independent sets of maximal rank.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.total_rank();
        self.central_sets()
            .filter(|&s| s.len() == r && self.rk(s) == r)
            .collect()
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        let r = self.total_rank();
        b.len() == r && self.rank(b) == Some(r)
    }

    /// `order[k]` is the k-th smallest element; `None` uses the ground order.
    pub fn positions(&self, order: Option<&[usize]>) -> Result<Vec<usize>> {
        let n = self.n();
        let Some(order) = order else {
            return Ok((0..n).collect());
        };
        let mut pos = vec![usize::MAX; n];
        if order.len() != n {
            return Err(Error::InvalidInput("order must list every ground element once".into()));
        }
        for (k, &e) in order.iter().enumerate() {
            if e >= n || pos[e] != usize::MAX {
                return Err(Error::InvalidInput("order must list every ground element once".into()));
            }
            pos[e] = k;
        }
        Ok(pos)
    }

    /// Activities of a basis with respect to a total order (see [`Self::positions`]).
    ///
    /// `e ∉ B` is externally active when `B ∪ e` is central and `e` is the
    /// smallest element of the circuit inside `B ∪ e`. `b ∈ B` is internally
    /// active when no smaller `e ∉ B` makes `(B - b) ∪ e` a basis.
    pub fn activities(&self, b: Subset, order: Option<&[usize]>) -> Result<Activities> {
        if !self.is_basis(b) {
            return Err(Error::Precondition(format!("{} is not a basis", self.fmt_set(b))));
        }
        let pos = self.positions(order)?;
        let outside = self.ground().difference(b);
        let mut external = Subset::EMPTY;
        for e in outside.iter() {
            let be = b.with(e);
            if !self.is_central(be) {
                continue;
            }
            let circuit_rest: Vec<usize> = b.iter().filter(|&x| self.is_independent(be.without(x))).collect();
            if circuit_rest.iter().all(|&x| pos[x] > pos[e]) {
                external = external.with(e);
            }
        }
        let mut internal = Subset::EMPTY;
        for x in b.iter() {
            let replaceable = outside
                .iter()
                .any(|e| pos[e] < pos[x] && self.is_basis(b.without(x).with(e)));
            if !replaceable {
                internal = internal.with(x);
            }
        }
        Ok(Activities { internal, external })
    }

    /// `Σ_B x^{|I(B)|} y^{|E(B)|}`.
    pub fn activity_tutte(&self, order: Option<&[usize]>) -> Result<BivariatePoly> {
        let mut p = BivariatePoly::zero();
        for b in self.bases() {
            let a = self.activities(b, order)?;
            p.add_term(a.internal.len() as u32, a.external.len() as u32, BigInt::from(1));
        }
        Ok(p)
    }

    /// Whether `(r, f, t)` is a molecule.
    pub fn is_molecule(&self, m: &Molecule) -> bool {
        if !m.r.is_disjoint(m.f) || !m.r.is_disjoint(m.t) || !m.f.is_disjoint(m.t) {
            return false;
        }
        let top = m.top();
        if !self.is_central(top) {
            return false;
        }
        let base = self.rk(m.r);
        m.r.interval(top)
            .all(|a| self.rk(a) == base + a.intersection(m.f).len())
    }

    /// The molecule with bottom `r` and top `top`, if one exists. Its `F`
    /// part is forced: exactly the elements raising the rank of `r`.
    pub fn molecule_between(&self, r: Subset, top: Subset) -> Option<Molecule> {
        if !r.is_subset(top) || !self.is_central(top) {
            return None;
        }
        let base = self.rk(r);
        let f = top
            .difference(r)
            .iter()
            .filter(|&e| self.rk(r.with(e)) == base + 1)
            .fold(Subset::EMPTY, |s, e| s.with(e));
        let m = Molecule {
            r,
            f,
            t: top.difference(r).difference(f),
        };
        self.is_molecule(&m).then_some(m)
    }

    pub fn molecules(&self) -> Vec<Molecule> {
        let mut out = Vec::new();
        for top in self.central_sets() {
            for r in top.subsets() {
                if let Some(m) = self.molecule_between(r, top) {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Every `(B - I(B), I(B), E(B))` is a molecule and every central set lies
    /// in exactly one interval `[B - I(B), B ∪ E(B)]`.
    pub fn crapo_partition_check(&self, order: Option<&[usize]>) -> Result<bool> {
        let mut intervals = Vec::new();
        for b in self.bases() {
            let a = self.activities(b, order)?;
            let m = Molecule {
                r: b.difference(a.internal),
                f: a.internal,
                t: a.external,
            };
            if !self.is_molecule(&m) {
                return Ok(false);
            }
            intervals.push((m.r, m.top()));
        }
        let mut covered = 0usize;
        for s in self.central_sets() {
            let hits = intervals
                .iter()
                .filter(|(lo, hi)| lo.is_subset(s) && s.is_subset(*hi))
                .count();
            if hits != 1 {
                return Ok(false);
            }
            covered += 1;
        }
        // intervals must not reach outside the complex
        let total: usize = intervals.iter().map(|(lo, hi)| 1usize << hi.difference(*lo).len()).sum();
        Ok(total == covered)
    }
}

/// Ground labels `"0", "1", ...`.
pub fn numbered_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Letters `a, b, c, ...` for small ground sets.
pub fn letter_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// The rank function of a list of integer vectors (columns of `m`).
pub fn column_rank_fn(m: &IntMatrix) -> impl Fn(Subset) -> usize + '_ {
    move |s: Subset| {
        let idx: Vec<usize> = s.iter().collect();
        if idx.is_empty() {
            0
        } else {
            m.select_columns(&idx).rank()
        }
    }
}

/// `Zero` offsets for [`LocallyRankedTriple::from_affine`].
pub fn zero_offsets(n: usize) -> Vec<BigRational> {
    vec![BigRational::zero(); n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn uniform(r: usize, n: usize) -> LocallyRankedTriple {
        LocallyRankedTriple::matroid(letter_labels(n), |s| s.len().min(r)).unwrap()
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn free_matroid_is_valid() {
        let t = uniform(2, 2);
        assert!(t.validate().is_ok());
        assert_eq!(t.closure(s(&[0])).unwrap(), s(&[0]));
        let a = t.activities(s(&[0, 1]), None).unwrap();
        assert_eq!(a.external, Subset::EMPTY);
    }

    #[test]
    fn rank_too_big_on_singleton() {
        let t = LocallyRankedTriple::new(
            letter_labels(1),
            &[(Subset::EMPTY, 0), (s(&[0]), 2)],
        )
        .unwrap();
        let rep = t.check_locally_ranked();
        assert_eq!(rep.count("R1"), 1);
        assert!(rep.violations[0].witness.contains("{a}"));
    }

    #[test]
    fn non_complex_rejected() {
        let r = LocallyRankedTriple::new(
            letter_labels(2),
            &[(Subset::EMPTY, 0), (s(&[0]), 1), (s(&[1]), 1), (s(&[0, 1]), 2), (Subset::EMPTY, 1)],
        );
        assert!(r.is_err());
        let r = LocallyRankedTriple::new(letter_labels(2), &[(Subset::EMPTY, 0), (s(&[0]), 1)]);
        assert!(r.is_err());
    }

    #[test]
    fn uniform_tutte_and_activities() {
        let t = uniform(2, 3);
        assert_eq!(t.tutte().to_string(), "x^2 + x + y");
        assert_eq!(t.bases().len(), 3);
        let a = t.activities(s(&[0, 1]), None).unwrap();
        assert_eq!(a.external, Subset::EMPTY);
        assert_eq!(t.activity_tutte(None).unwrap(), t.tutte());
        assert!(t.crapo_partition_check(None).unwrap());
        assert_eq!(t.flats().len(), 5);
    }

    #[test]
    fn single_element() {
        let coloop = LocallyRankedTriple::matroid(letter_labels(1), |s| s.len()).unwrap();
        assert_eq!(coloop.tutte().to_string(), "x");
        let lp = LocallyRankedTriple::matroid(letter_labels(1), |_| 0).unwrap();
        assert_eq!(lp.tutte().to_string(), "y");
        let a = lp.activities(Subset::EMPTY, None).unwrap();
        assert_eq!(a.external, s(&[0]));
    }

    #[test]
    fn parallel_lines() {
        // two parallel affine lines never meet
        let normals = IntMatrix::from_rows(&[[1, 1], [0, 0]]);
        let offs = vec![BigRational::from_integer(0.into()), BigRational::from_integer(1.into())];
        let t = LocallyRankedTriple::from_affine(letter_labels(2), &normals, &offs).unwrap();
        assert!(!t.is_central(s(&[0, 1])));
        assert!(t.validate().is_ok());
        assert_eq!(t.tutte().to_string(), "x + 1");
        assert_eq!(t.activity_tutte(None).unwrap(), t.tutte());
        assert!(t.crapo_partition_check(None).unwrap());
    }

    #[test]
    fn two_crossing_lines() {
        let normals = IntMatrix::from_rows(&[[1, 0], [0, 1]]);
        let t = LocallyRankedTriple::from_affine(letter_labels(2), &normals, &zero_offsets(2)).unwrap();
        assert!(t.validate().is_ok());
        assert!(t.is_matroid());
    }

    #[test]
    fn delete_and_contract() {
        let t = uniform(2, 3);
        assert_eq!(t.delete(Subset::EMPTY), t);
        assert_eq!(t.contract(Subset::EMPTY).unwrap(), t);
        let c = t.contract(s(&[0])).unwrap();
        assert_eq!(c.labels(), &["b".to_string(), "c".to_string()]);
        assert_eq!(c.tutte().to_string(), "x + y");
        let d = t.delete(s(&[0]));
        assert_eq!(d.tutte().to_string(), "x^2");
        assert!(t.contract(Subset(0b1000)).is_err());
    }

    #[test]
    fn molecules_contain_bases() {
        let t = uniform(2, 3);
        let mols = t.molecules();
        for b in t.bases() {
            assert!(mols.contains(&Molecule {
                r: Subset::EMPTY,
                f: b,
                t: Subset::EMPTY
            }));
        }
        for m in &mols {
            assert!(t.is_molecule(m));
        }
    }

    fn arb_matroid() -> impl Strategy<Value = LocallyRankedTriple> {
        (1usize..=3, 1usize..=6, proptest::collection::vec(-2i64..=2, 18)).prop_map(|(d, n, entries)| {
            let rows: Vec<Vec<i64>> = (0..d).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows);
            LocallyRankedTriple::matroid(numbered_labels(n), column_rank_fn(&m)).unwrap()
        })
    }

    fn arb_affine() -> impl Strategy<Value = LocallyRankedTriple> {
        (1usize..=5, proptest::collection::vec(-2i64..=2, 10), proptest::collection::vec(-1i64..=1, 5)).prop_map(
            |(n, entries, offs)| {
                let rows = vec![entries[..n].to_vec(), entries[5..5 + n].to_vec()];
                let m = IntMatrix::from_rows(&rows);
                let offs: Vec<BigRational> = offs[..n]
                    .iter()
                    .enumerate()
                    .map(|(i, &o)| {
                        // zero normals must sit at offset zero to stay central
                        if m.is_column_zero(i) {
                            BigRational::zero()
                        } else {
                            BigRational::from_integer(o.into())
                        }
                    })
                    .collect();
                LocallyRankedTriple::from_affine(numbered_labels(n), &m, &offs).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn closure_is_idempotent(t in arb_affine()) {
            for x in t.central_sets() {
                let c = t.closure(x).unwrap();
                prop_assert!(x.is_subset(c));
                prop_assert_eq!(t.rank(c), t.rank(x));
                prop_assert_eq!(t.closure(c).unwrap(), c);
            }
        }

        #[test]
        fn affine_arrangements_are_semimatroids(t in arb_affine()) {
            prop_assert!(t.validate().is_ok());
            for e in 0..t.n() {
                prop_assert!(t.delete(Subset::singleton(e)).validate().is_ok());
                prop_assert!(t.contract(Subset::singleton(e)).unwrap().validate().is_ok());
            }
        }

        #[test]
        fn activities_expand_tutte(t in arb_affine()) {
            prop_assert_eq!(t.activity_tutte(None).unwrap(), t.tutte());
            prop_assert!(t.crapo_partition_check(None).unwrap());
            let rev: Vec<usize> = (0..t.n()).rev().collect();
            prop_assert_eq!(t.activity_tutte(Some(&rev)).unwrap(), t.tutte());
        }

        #[test]
        fn matroid_activities(t in arb_matroid()) {
            prop_assert!(t.validate().is_ok());
            prop_assert_eq!(t.activity_tutte(None).unwrap(), t.tutte());
            prop_assert!(t.crapo_partition_check(None).unwrap());
        }
    }
}
