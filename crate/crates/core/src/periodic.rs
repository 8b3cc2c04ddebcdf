//! Periodic hyperplane arrangements `{x : a_i · x = α_i + k}` in `R^d`, their
//! translation lattices, multiplicities and toric layers.
//!
//! For `X ⊆ [n]` write `A[X]` for the columns in `X`. Then `I(X) = A[X]^T Z^d`,
//! `W(X)` is the set of `k ∈ Z^X` for which `A[X]^T x = α_X + k` is solvable,
//! and the multiplicity is `[W(X) : I(X)]` (zero when `W(X)` is empty).
//!
//! Layers are enumerated over every subset and every coset of `W(X)/I(X)`, so
//! the cost is roughly `2^n` times the largest multiplicity.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{Layers, QuotientData};
use crate::error::{Error, Result};
use crate::exact_lattice::normal_form::{integer_kernel, solve_integer, solve_rational_rhs};
use crate::exact_lattice::{gcd_minors, lattice_index, IntMatrix, LatticeIndex, Presentation, SubLattice};
use crate::geomsl::FinitePoset;
use crate::poly::UniPoly;
use crate::semimatroid::LocallyRankedTriple;
use crate::subset::{format_set, Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicArrangement {
    a: IntMatrix,
    offsets: Vec<BigRational>,
    labels: Vec<String>,
}

/// A connected component of an intersection, up to translation: its support
/// and the canonical representative of its coset modulo `I(support)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layer {
    pub support: Subset,
    pub coset: Vec<BigInt>,
    pub rank: usize,
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coset.iter().map(|v| v.to_string()).collect();
        write!(f, "{:?} | ({}) | {}", self.support, c.join(","), self.rank)
    }
}

/// Layers with their order and the map from central sets to layers.
#[derive(Clone, Debug)]
pub struct LayerPoset {
    pub poset: FinitePoset,
    pub layers: Vec<Layer>,
    pub kappa: HashMap<Subset, Vec<usize>>,
}

impl PeriodicArrangement {
    /// Rejects zero columns; see [`Self::with_loops`].
    pub fn new(a: IntMatrix, offsets: Option<Vec<BigRational>>) -> Result<Self> {
        if let Some(j) = (0..a.cols()).find(|&j| a.is_column_zero(j)) {
            return Err(Error::InvalidInput(format!(
                "column {j} is zero; build loops with PeriodicArrangement::with_loops"
            )));
        }
        Self::with_loops(a, offsets)
    }

    /// Allows zero columns (loop orbits).
    pub fn with_loops(a: IntMatrix, offsets: Option<Vec<BigRational>>) -> Result<Self> {
        let n = a.cols();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n, MAX_GROUND));
        }
        let offsets = offsets.unwrap_or_else(|| vec![BigRational::zero(); n]);
        if offsets.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: offsets.len(),
            });
        }
        Ok(PeriodicArrangement {
            a,
            offsets,
            labels: (1..=n).map(|i| i.to_string()).collect(),
        })
    }

    pub fn centered(a: IntMatrix) -> Result<Self> {
        Self::new(a, None)
    }

    pub fn d(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn offsets(&self) -> &[BigRational] {
        &self.offsets
    }

    /// Element labels `1..=n`.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_centered(&self) -> bool {
        self.offsets.iter().all(Zero::is_zero)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n()).any(|j| self.a.is_column_zero(j))
    }

    fn columns(&self, x: Subset) -> IntMatrix {
        let idx: Vec<usize> = x.iter().collect();
        self.a.select_columns(&idx)
    }

    pub fn rank(&self, x: Subset) -> usize {
        if x.is_empty() {
            0
        } else {
            self.columns(x).rank()
        }
    }

    /// `A[X]^T Z^d` inside `Z^X`.
    pub fn i_lattice(&self, x: Subset) -> SubLattice {
        SubLattice::new(self.columns(x).transpose())
    }

    /// `W(X)` as a (possibly affine) lattice, or `None` when empty.
    pub fn w_lattice(&self, x: Subset) -> Option<SubLattice> {
        let ax = self.columns(x);
        // k + α_X must lie in the row space of A[X], i.e. be orthogonal to ker A[X]
        let normals = integer_kernel(&ax);
        let direction = integer_kernel(&normals.transpose());
        if self.is_centered() {
            return Some(SubLattice::new(direction));
        }
        let alpha: Vec<BigRational> = x.iter().map(|i| self.offsets[i].clone()).collect();
        let nt = normals.transpose();
        let rhs: Vec<BigRational> = (0..nt.rows())
            .map(|r| -(0..nt.cols()).map(|c| BigRational::from_integer(nt[(r, c)].clone()) * &alpha[c]).sum::<BigRational>())
            .collect();
        let k = solve_integer(&nt, &rhs)?;
        Some(SubLattice::with_offset(direction, k))
    }

    /// `[W(X) : I(X)]`, or zero when `W(X)` is empty.
    pub fn multiplicity(&self, x: Subset) -> BigInt {
        match self.w_lattice(x) {
            None => BigInt::zero(),
            Some(w) => match lattice_index(&w.direction(), &self.i_lattice(x)) {
                Ok(LatticeIndex::Finite(m)) => m,
                _ => unreachable!("I(X) has full rank in W(X)"),
            },
        }
    }

    /// gcd of the maximal nonzero minors of `A[X]`.
    pub fn minor_multiplicity(&self, x: Subset) -> BigInt {
        let r = self.rank(x);
        if r == 0 {
            BigInt::one()
        } else {
            gcd_minors(&self.columns(x), r)
        }
    }

    pub fn triple(&self) -> Result<LocallyRankedTriple> {
        let central: Vec<(Subset, usize)> = Subset::full(self.n())
            .subsets()
            .filter(|&x| self.w_lattice(x).is_some())
            .map(|x| (x, self.rank(x)))
            .collect();
        LocallyRankedTriple::new(self.labels.clone(), &central)
    }

    /// Ranks and multiplicities of a centered arrangement over all of `[n]`.
    pub fn arithmetic_matroid(&self) -> Result<QuotientData> {
        if !self.is_centered() {
            return Err(Error::Precondition("arithmetic matroid of a non-centered arrangement".into()));
        }
        self.quotient_data()
    }

    /// Orbit data for any offsets: central sets are those with `W(X)` nonempty.
    pub fn quotient_data(&self) -> Result<QuotientData> {
        QuotientData::from_fn(self.triple()?, |x| self.multiplicity(x))
    }

    /// The same data with the layer poset attached.
    pub fn quotient_data_with_layers(&self) -> Result<QuotientData> {
        let lp = self.layer_poset()?;
        let support = lp.layers.iter().map(|l| l.support).collect();
        self.quotient_data()?.with_layers(Layers {
            poset: lp.poset,
            support,
            kappa: lp.kappa,
        })
    }

    /// The layer containing `H(X, k)`: its support collects every `e` whose
    /// hyperplane contains the whole intersection.
    pub fn layer_closure(&self, x: Subset, k: &[BigInt]) -> Result<Layer> {
        let w = self
            .w_lattice(x)
            .ok_or_else(|| Error::Precondition(format!("W({}) is empty", format_set(&self.labels, x))))?;
        if k.len() != x.len() || !w.contains(k) {
            return Err(Error::Precondition(format!(
                "translation vector is not in W({})",
                format_set(&self.labels, x)
            )));
        }
        let ax_t = self.columns(x).transpose();
        let rhs: Vec<BigRational> = x
            .iter()
            .zip(k)
            .map(|(i, ki)| &self.offsets[i] + BigRational::from_integer(ki.clone()))
            .collect();
        let point = solve_rational_rhs(&ax_t, &rhs).expect("k lies in W(X)");
        let rx = self.rank(x);
        let mut support = Subset::EMPTY;
        let mut values = Vec::new();
        for e in 0..self.n() {
            if self.rank(x.with(e)) != rx {
                continue;
            }
            let v: BigRational = (0..self.d())
                .map(|r| BigRational::from_integer(self.a[(r, e)].clone()) * &point[r])
                .sum::<BigRational>()
                - &self.offsets[e];
            if v.is_integer() {
                support = support.with(e);
                values.push(v.to_integer());
            }
        }
        let coset = self.i_lattice(support).reduce(&values);
        Ok(Layer {
            support,
            coset,
            rank: rx,
        })
    }

    /// Representatives of `W(X)/I(X)`, one per coset.
    pub fn coset_representatives(&self, x: Subset) -> Vec<Vec<BigInt>> {
        let Some(w) = self.w_lattice(x) else { return Vec::new() };
        let basis = w.basis();
        let base: Vec<BigInt> = w.offset().map_or_else(|| vec![BigInt::zero(); x.len()], |o| o.to_vec());
        let i = self.i_lattice(x);
        // generators of I(X) in the coordinates of the W(X) basis
        let coords: Vec<Vec<BigInt>> = i
            .generators()
            .columns()
            .iter()
            .map(|c| w.coordinates(c).expect("I(X) ⊆ W(X)"))
            .collect();
        let rel = IntMatrix::from_columns(basis.cols(), &coords);
        let pres = Presentation::new(basis.cols(), rel);
        let elements = pres.elements().expect("W(X)/I(X) is finite");
        elements
            .into_iter()
            .map(|c| {
                let v = basis.mul_vec(&c);
                v.iter().zip(&base).map(|(a, b)| a + b).collect()
            })
            .collect()
    }

    /// All layers, ordered by `(F, [k]) ≤ (G, [l])` iff `F ⊆ G` and
    /// `l|_F ∈ k + I(F)`.
    pub fn layer_poset(&self) -> Result<LayerPoset> {
        let mut layers: Vec<Layer> = Vec::new();
        let mut index: HashMap<Layer, usize> = HashMap::new();
        let mut kappa: HashMap<Subset, Vec<usize>> = HashMap::new();
        let mut subsets: Vec<Subset> = Subset::full(self.n()).subsets().collect();
        subsets.sort_by_key(|s| (s.len(), s.bits()));
        for x in subsets {
            let reps = self.coset_representatives(x);
            if reps.is_empty() {
                continue;
            }
            let mut ks = Vec::with_capacity(reps.len());
            for k in reps {
                let layer = self.layer_closure(x, &k)?;
                let id = *index.entry(layer.clone()).or_insert_with(|| {
                    layers.push(layer);
                    layers.len() - 1
                });
                ks.push(id);
            }
            kappa.insert(x, ks);
        }
        let i_lattices: Vec<SubLattice> = layers.iter().map(|l| self.i_lattice(l.support)).collect();
        let leq = |p: usize, q: usize| -> bool {
            let (f, g) = (&layers[p], &layers[q]);
            if !f.support.is_subset(g.support) {
                return false;
            }
            let positions: Vec<usize> = g.support.iter().collect();
            let restricted: Vec<BigInt> = f
                .support
                .iter()
                .map(|e| g.coset[positions.iter().position(|&x| x == e).expect("subset")].clone())
                .collect();
            let diff: Vec<BigInt> = restricted.iter().zip(&f.coset).map(|(a, b)| a - b).collect();
            i_lattices[p].contains(&diff)
        };
        let labels = layers.iter().map(|l| l.to_string()).collect();
        let ranks = layers.iter().map(|l| l.rank).collect();
        let poset = FinitePoset::from_order(labels, Some(ranks), leq);
        Ok(LayerPoset { poset, layers, kappa })
    }

    /// Number of elements of `T` in the support of `layer`.
    pub fn eta(&self, t: Subset, layer: &Layer) -> usize {
        layer.support.intersection(t).len()
    }

    /// `Σ_{L ⊆ T} ρ(R ∪ L, R ∪ T) x^{|L|} = Σ_O x^{η_T(O)}` over the layers of `R`.
    pub fn check_eta_identity(&self, r: Subset, t: Subset) -> Result<bool> {
        self.quotient_data_with_layers()?.check_eta_identity(r, t)
    }

    pub fn char_poly(&self) -> Result<UniPoly> {
        self.layer_poset()?.poset.char_poly(Some(self.rank(Subset::full(self.n()))))
    }

    /// `χ(t) = (-1)^r T(1 - t, 0)` for the layer poset.
    pub fn check_theorem_cp(&self) -> Result<bool> {
        if self.has_loops() {
            return Err(Error::Precondition("arrangement has a loop".into()));
        }
        self.quotient_data_with_layers()?.check_theorem_cp_data()
    }

    /// For each flat `F` of the underlying matroid, the layers with support
    /// exactly `F` number `m(F)`.
    pub fn check_layer_counts(&self) -> Result<bool> {
        let lp = self.layer_poset()?;
        for f in Subset::full(self.n()).subsets() {
            let rf = self.rank(f);
            let closed = (0..self.n()).all(|e| f.contains(e) || self.rank(f.with(e)) > rf);
            if !closed || self.w_lattice(f).is_none() {
                continue;
            }
            let count = lp.layers.iter().filter(|l| l.support == f).count();
            if BigInt::from(count) != self.multiplicity(f) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
