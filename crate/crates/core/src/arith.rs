//! Orbit-level data of a group action on a semimatroid: multiplicities, the
//! arithmetic axioms, the multiplicity-weighted Tutte polynomial and its
//! deletion/contraction and basis-activity expansions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geomsl::FinitePoset;
use crate::poly::{BivariatePoly, UniPoly};
use crate::report::Report;
use crate::semimatroid::{LocallyRankedTriple, Molecule};
use crate::subset::Subset;

/// Layer poset attached to quotient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layers {
    pub poset: FinitePoset,
    /// Support of each layer, as a subset of the ground set.
    pub support: Vec<Subset>,
    /// For each central set, the distinct layers its orbits close up to.
    pub kappa: HashMap<Subset, Vec<usize>>,
}

/// Ground set, central sets and ranks, with a positive multiplicity on every
/// central set and optionally the layer poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    triple: LocallyRankedTriple,
    mult: Vec<BigInt>,
    layers: Option<Layers>,
}

/// Which axioms hold, with a witness list for the failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub locally_ranked: bool,
    pub semimatroid: bool,
    pub matroid: bool,
    pub p: bool,
    pub a11: bool,
    pub a12: bool,
    pub a2: bool,
    pub report: Report,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.locally_ranked && self.semimatroid && self.p && self.a11 && self.a12 && self.a2
    }

    pub fn almost_arithmetic(&self) -> bool {
        self.p && self.a12 && self.a2
    }

    /// Position in the hierarchy pseudo-arithmetic ⊃ almost-arithmetic ⊃ arithmetic.
    pub fn classification(&self) -> &'static str {
        if !self.locally_ranked {
            "not locally ranked"
        } else if self.p && self.a11 && self.a12 && self.a2 {
            "arithmetic"
        } else if self.almost_arithmetic() {
            "almost-arithmetic"
        } else if self.p {
            "pseudo-arithmetic"
        } else {
            "none"
        }
    }
}

/// Which identity applies to an element in deletion/contraction.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DelConCase {
    Loop,
    Isthmus,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelConCheck {
    pub case: DelConCase,
    pub tutte: BivariatePoly,
    pub deletion: BivariatePoly,
    pub contraction: BivariatePoly,
    pub combined: BivariatePoly,
    pub holds: bool,
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl QuotientData {
    /// Multiplicities are given for central sets only and must be positive;
    /// missing central sets are an error.
    pub fn new(triple: LocallyRankedTriple, mult: &[(Subset, BigInt)]) -> Result<Self> {
        let mut table = vec![BigInt::zero(); 1 << triple.n()];
        let mut seen = vec![false; 1 << triple.n()];
        for (s, m) in mult {
            if !triple.is_central(*s) {
                return Err(Error::InvalidInput(format!(
                    "multiplicity given for non-central set {}",
                    triple.fmt_set(*s)
                )));
            }
            if !m.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "multiplicity of {} must be positive, got {m}",
                    triple.fmt_set(*s)
                )));
            }
            let i = s.bits() as usize;
            if seen[i] && table[i] != *m {
                return Err(Error::InvalidInput(format!(
                    "conflicting multiplicities for {}",
                    triple.fmt_set(*s)
                )));
            }
            seen[i] = true;
            table[i] = m.clone();
        }
        if let Some(s) = triple.central_sets().find(|s| !seen[s.bits() as usize]) {
            return Err(Error::InvalidInput(format!("no multiplicity for {}", triple.fmt_set(s))));
        }
        Ok(QuotientData {
            triple,
            mult: table,
            layers: None,
        })
    }

    pub fn from_fn(triple: LocallyRankedTriple, m: impl Fn(Subset) -> BigInt) -> Result<Self> {
        let pairs: Vec<(Subset, BigInt)> = triple.central_sets().map(|s| (s, m(s))).collect();
        Self::new(triple, &pairs)
    }

    /// Multiplicity one everywhere.
    pub fn trivial(triple: LocallyRankedTriple) -> Self {
        Self::from_fn(triple, |_| BigInt::one()).expect("positive")
    }

    /// Attaches layers, checking that each central set `A` closes up to
    /// `m(A)` distinct layers whose supports contain `A` and whose rank is `rk(A)`.
    pub fn with_layers(mut self, layers: Layers) -> Result<Self> {
        let t = &self.triple;
        if layers.support.len() != layers.poset.len() {
            return Err(Error::DimensionMismatch {
                expected: layers.poset.len(),
                found: layers.support.len(),
            });
        }
        if !layers.poset.is_ranked() {
            return Err(Error::InvalidInput("layer poset is not ranked".into()));
        }
        for s in t.central_sets() {
            let Some(ks) = layers.kappa.get(&s) else {
                return Err(Error::InvalidInput(format!("kappa missing for {}", t.fmt_set(s))));
            };
            let mut sorted = ks.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != ks.len() || BigInt::from(ks.len()) != self.mult[s.bits() as usize] {
                return Err(Error::InvalidInput(format!(
                    "kappa of {} lists {} distinct layers, multiplicity is {}",
                    t.fmt_set(s),
                    sorted.len(),
                    self.mult[s.bits() as usize]
                )));
            }
            for &p in ks {
                if p >= layers.poset.len() {
                    return Err(Error::InvalidInput(format!("kappa of {} points past the poset", t.fmt_set(s))));
                }
                if !s.is_subset(layers.support[p]) || layers.poset.rank(p) != t.rank(s) {
                    return Err(Error::InvalidInput(format!(
                        "layer {} does not contain {} with equal rank",
                        layers.poset.label(p),
                        t.fmt_set(s)
                    )));
                }
            }
        }
        for k in layers.kappa.keys() {
            if !t.is_central(*k) {
                return Err(Error::InvalidInput(format!("kappa given for non-central {}", t.fmt_set(*k))));
            }
        }
        self.layers = Some(layers);
        Ok(self)
    }

    pub fn triple(&self) -> &LocallyRankedTriple {
        &self.triple
    }

    pub fn layers(&self) -> Option<&Layers> {
        self.layers.as_ref()
    }

    pub fn n(&self) -> usize {
        self.triple.n()
    }

    /// Multiplicity, zero off the central family.
    pub fn mult(&self, s: Subset) -> &BigInt {
        &self.mult[s.bits() as usize]
    }

    pub fn rank(&self, s: Subset) -> Option<usize> {
        self.triple.rank(s)
    }

    fn element(&self, label: &str) -> Result<usize> {
        self.triple
            .index_of(label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown element {label:?}")))
    }

    /// `ρ(R, M) = (-1)^{|T|} Σ_{R ⊆ A ⊆ M} (-1)^{|M| - |A|} m(A)` for the
    /// molecule `(R, F, T)` with top `M`.
    pub fn rho(&self, r: Subset, m: Subset) -> Result<BigInt> {
        let mol = self.triple.molecule_between(r, m).ok_or_else(|| {
            Error::Precondition(format!(
                "{} and {} do not bound a molecule",
                self.triple.fmt_set(r),
                self.triple.fmt_set(m)
            ))
        })?;
        Ok(self.rho_of(&mol))
    }

    pub fn rho_of(&self, mol: &Molecule) -> BigInt {
        let top = mol.top();
        let s: BigInt = mol
            .r
            .interval(top)
            .map(|a| sign(top.len() - a.len()) * self.mult(a))
            .sum();
        sign(mol.t.len()) * s
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let t = &self.triple;
        let lr = t.check_locally_ranked();
        let sm = t.check_semimatroid();
        let locally_ranked = lr.is_ok();
        let semimatroid = locally_ranked && sm.is_ok();
        let matroid = semimatroid && t.is_matroid();
        let mut report = Report::new();
        report.extend(lr);
        report.extend(sm);

        for mol in t.molecules() {
            let rho = self.rho_of(&mol);
            if rho.is_negative() {
                report.push(
                    "P",
                    format!(
                        "ρ({}, {}) = {rho} for the molecule with F={}, T={}",
                        t.fmt_set(mol.r),
                        t.fmt_set(mol.top()),
                        t.fmt_set(mol.f),
                        t.fmt_set(mol.t)
                    ),
                );
            }
            let lhs = self.mult(mol.r) * self.mult(mol.top());
            let rhs = self.mult(mol.r.union(mol.f)) * self.mult(mol.r.union(mol.t));
            if lhs != rhs {
                report.push(
                    "A2",
                    format!(
                        "m({})·m({}) = {lhs} but m({})·m({}) = {rhs}",
                        t.fmt_set(mol.r),
                        t.fmt_set(mol.top()),
                        t.fmt_set(mol.r.union(mol.f)),
                        t.fmt_set(mol.r.union(mol.t))
                    ),
                );
            }
        }

        for a in t.central_sets() {
            for e in t.ground().difference(a).iter() {
                let ae = a.with(e);
                let Some(rae) = t.rank(ae) else { continue };
                let (ma, mae) = (self.mult(a), self.mult(ae));
                if rae == t.rank(a).expect("central") {
                    if !ma.is_multiple_of(mae) {
                        report.push(
                            "A.1.1",
                            format!(
                                "m({})={} does not divide m({})={}",
                                t.fmt_set(ae),
                                mae,
                                t.fmt_set(a),
                                ma
                            ),
                        );
                    }
                } else if !mae.is_multiple_of(ma) {
                    report.push(
                        "A.1.2",
                        format!(
                            "m({})={} does not divide m({})={}",
                            t.fmt_set(a),
                            ma,
                            t.fmt_set(ae),
                            mae
                        ),
                    );
                }
            }
        }

        AxiomReport {
            locally_ranked,
            semimatroid,
            matroid,
            p: report.passes("P"),
            a11: report.passes("A.1.1"),
            a12: report.passes("A.1.2"),
            a2: report.passes("A2"),
            report,
        }
    }

    /// `Σ_{A central} m(A) (x-1)^{r - rk A} (y-1)^{|A| - rk A}`.
    pub fn g_tutte(&self) -> BivariatePoly {
        let t = &self.triple;
        let r = t.total_rank();
        let mut weights: HashMap<(u32, u32), BigInt> = HashMap::new();
        for a in t.central_sets() {
            let rk = t.rank(a).expect("central");
            *weights.entry(((r - rk) as u32, (a.len() - rk) as u32)).or_default() += self.mult(a);
        }
        weights
            .into_iter()
            .map(|((i, j), w)| BivariatePoly::shifted_monomial(i, j).scale(&w))
            .sum()
    }

    /// Maps a subset of `small`'s ground (a sub-ground of `self`) to `self`'s indices.
    fn lift(&self, small: &LocallyRankedTriple, s: Subset) -> Subset {
        Subset::from_indices(s.iter().map(|i| {
            self.triple
                .index_of(&small.labels()[i])
                .expect("sub-ground labels come from the parent")
        }))
    }

    /// Removes `e`; central sets avoiding `e` keep their multiplicity.
    pub fn delete(&self, e: &str) -> Result<QuotientData> {
        let i = self.element(e)?;
        let triple = self.triple.delete(Subset::singleton(i));
        let lifted: Vec<(Subset, BigInt)> = triple
            .central_sets()
            .map(|s| (s, self.mult(self.lift(&triple, s)).clone()))
            .collect();
        QuotientData::new(triple, &lifted)
    }

    /// Contracts `e`: `C/e = {A : e ∉ A, A ∪ e central}`, rank
    /// `rk(A ∪ e) - rk(e)`, multiplicity `m(A ∪ e)`.
    pub fn contract(&self, e: &str) -> Result<QuotientData> {
        let i = self.element(e)?;
        let triple = self.triple.contract(Subset::singleton(i))?;
        let lifted: Vec<(Subset, BigInt)> = triple
            .central_sets()
            .map(|s| (s, self.mult(self.lift(&triple, s).with(i)).clone()))
            .collect();
        QuotientData::new(triple, &lifted)
    }

    /// Loop when `rk(e) = 0`; isthmus when every central `X` avoiding `e` has
    /// `X ∪ e` central of rank `rk(X) + 1`; generic otherwise.
    pub fn del_con_case(&self, e: &str) -> Result<DelConCase> {
        let i = self.element(e)?;
        let t = &self.triple;
        if t.rank(Subset::singleton(i)) == Some(0) {
            return Ok(DelConCase::Loop);
        }
        let isthmus = t
            .central_sets()
            .filter(|x| !x.contains(i))
            .all(|x| t.rank(x.with(i)) == Some(t.rank(x).expect("central") + 1));
        Ok(if isthmus { DelConCase::Isthmus } else { DelConCase::Generic })
    }

    pub fn check_del_con(&self, e: &str) -> Result<DelConCheck> {
        let case = self.del_con_case(e)?;
        let tutte = self.g_tutte();
        let deletion = self.delete(e)?.g_tutte();
        let contraction = self.contract(e)?.g_tutte();
        let xm = &BivariatePoly::x() - &BivariatePoly::one();
        let ym = &BivariatePoly::y() - &BivariatePoly::one();
        let combined = match case {
            DelConCase::Generic => &deletion + &contraction,
            DelConCase::Isthmus => &(&xm * &deletion) + &contraction,
            DelConCase::Loop => &deletion + &(&ym * &contraction),
        };
        Ok(DelConCheck {
            case,
            holds: combined == tutte,
            tutte,
            deletion,
            contraction,
            combined,
        })
    }

    /// `Σ_B (Σ_{F ⊆ I} ρ(R, R ∪ (I - F))/m(R) x^{|F|}) (Σ_{T ⊆ E} ρ(R ∪ T, R ∪ E) y^{|T|})`
    /// with `R = B - I(B)`. Requires a semimatroid satisfying (P), (A.1.2) and
    /// (A2); every division must be exact with a nonnegative quotient.
    pub fn crapo_decomposition(&self, order: Option<&[usize]>) -> Result<BivariatePoly> {
        let rep = self.check_axioms();
        if !rep.semimatroid {
            let v = rep
                .report
                .violations
                .iter()
                .find(|v| v.axiom.starts_with('R') || v.axiom.starts_with("CR"))
                .expect("a failing semimatroid axiom");
            return Err(Error::Precondition(format!("not a semimatroid: ({}) {}", v.axiom, v.witness)));
        }
        if !rep.almost_arithmetic() {
            let v = rep
                .report
                .violations
                .iter()
                .find(|v| matches!(v.axiom.as_str(), "P" | "A.1.2" | "A2"))
                .expect("a failing axiom");
            return Err(Error::Precondition(format!("not almost-arithmetic: ({}) {}", v.axiom, v.witness)));
        }
        self.crapo_unchecked(order)
    }

    /// The same double sum without the axiom preconditions.
    pub fn crapo_unchecked(&self, order: Option<&[usize]>) -> Result<BivariatePoly> {
        let t = &self.triple;
        let mut total = BivariatePoly::zero();
        for b in t.bases() {
            let act = t.activities(b, order)?;
            let r = b.difference(act.internal);
            let mr = self.mult(r);
            let mut xs = BivariatePoly::zero();
            for f in act.internal.subsets() {
                let rho = self.rho(r, r.union(act.internal.difference(f)))?;
                let (q, rem) = rho.div_rem(mr);
                if !rem.is_zero() || q.is_negative() {
                    return Err(Error::InexactDivision(format!(
                        "ρ({}, {})={rho} is not a nonnegative multiple of m({})={mr}",
                        t.fmt_set(r),
                        t.fmt_set(r.union(act.internal.difference(f))),
                        t.fmt_set(r)
                    )));
                }
                xs.add_term(f.len() as u32, 0, q);
            }
            let top = r.union(act.external);
            let mut ys = BivariatePoly::zero();
            for s in act.external.subsets() {
                ys.add_term(0, s.len() as u32, self.rho(r.union(s), top)?);
            }
            total += &(&xs * &ys);
        }
        Ok(total)
    }

    pub fn check_crapo(&self, order: Option<&[usize]>) -> Result<bool> {
        Ok(self.crapo_decomposition(order)? == self.g_tutte())
    }

    /// Characteristic polynomial of the attached layer poset.
    pub fn layer_char_poly(&self) -> Result<UniPoly> {
        let layers = self.layers.as_ref().ok_or(Error::MissingLayers)?;
        layers.poset.char_poly(Some(self.triple.total_rank()))
    }

    /// `χ(t) = (-1)^r T(1 - t, 0)` for the attached layer poset.
    pub fn check_theorem_cp_data(&self) -> Result<bool> {
        let chi = self.layer_char_poly()?;
        if (0..self.n()).any(|i| self.triple.rank(Subset::singleton(i)) == Some(0)) {
            return Err(Error::Precondition("data has a loop".into()));
        }
        let r = self.triple.total_rank();
        let rhs = self.g_tutte().at_one_minus_t_zero().scale(&sign(r));
        Ok(chi == rhs)
    }

    /// `Σ_{L ⊆ T} ρ(R ∪ L, R ∪ T) x^{|L|}`.
    pub fn eta_lhs(&self, r: Subset, t: Subset) -> Result<BivariatePoly> {
        let top = r.union(t);
        let mut p = BivariatePoly::zero();
        for l in t.subsets() {
            p.add_term(l.len() as u32, 0, self.rho(r.union(l), top)?);
        }
        Ok(p)
    }

    /// `Σ_O x^{η_T(O)}` over the layers of `R`, where `η_T(O)` counts the
    /// elements of `T` in the support of `O`.
    pub fn eta_rhs(&self, r: Subset, t: Subset) -> Result<BivariatePoly> {
        let layers = self.layers.as_ref().ok_or(Error::MissingLayers)?;
        let ks = layers
            .kappa
            .get(&r)
            .ok_or_else(|| Error::Precondition(format!("{} is not central", self.triple.fmt_set(r))))?;
        let mut p = BivariatePoly::zero();
        for &k in ks {
            p.add_term(layers.support[k].intersection(t).len() as u32, 0, BigInt::one());
        }
        Ok(p)
    }

    /// Both sides agree for the molecule `(R, ∅, T)`.
    pub fn check_eta_identity(&self, r: Subset, t: Subset) -> Result<bool> {
        let mol = Molecule {
            r,
            f: Subset::EMPTY,
            t,
        };
        if !self.triple.is_molecule(&mol) {
            return Err(Error::Precondition(format!(
                "({}, ∅, {}) is not a molecule",
                self.triple.fmt_set(r),
                self.triple.fmt_set(t)
            )));
        }
        Ok(self.eta_lhs(r, t)? == self.eta_rhs(r, t)?)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::semimatroid::letter_labels;

    fn set(t: &LocallyRankedTriple, s: &str) -> Subset {
        let labels: Vec<String> = s.chars().map(|c| c.to_string()).collect();
        t.subset_of(&labels).unwrap()
    }

    /// Multiplicities on the orbit complex `2^{abcd} ∪ 2^{abe} ∪ 2^{de}`.
    pub(crate) fn running_example() -> QuotientData {
        let labels = letter_labels(5);
        let mult: &[(&str, i64)] = &[
            ("", 1),
            ("a", 1),
            ("b", 1),
            ("c", 1),
            ("d", 1),
            ("e", 1),
            ("ab", 4),
            ("ac", 2),
            ("bc", 2),
            ("ad", 1),
            ("bd", 1),
            ("cd", 1),
            ("ae", 2),
            ("be", 2),
            ("de", 1),
            ("abc", 1),
            ("abd", 1),
            ("acd", 1),
            ("bcd", 1),
            ("abe", 2),
            ("abcd", 1),
        ];
        let idx = |s: &str| Subset::from_indices(s.chars().map(|c| (c as u8 - b'a') as usize));
        let central: Vec<(Subset, usize)> = mult.iter().map(|(s, _)| (idx(s), s.len().min(2))).collect();
        let t = LocallyRankedTriple::new(labels, &central).unwrap();
        let m: Vec<(Subset, BigInt)> = mult.iter().map(|(s, v)| (idx(s), BigInt::from(*v))).collect();
        QuotientData::new(t, &m).unwrap()
    }

    #[test]
    fn running_tutte() {
        let d = running_example();
        assert_eq!(d.g_tutte().to_string(), "x^2 + y^2 + 3x + 4y + 7");
        assert_eq!(d.delete("e").unwrap().g_tutte().to_string(), "x^2 + y^2 + 2x + 2y + 5");
        assert_eq!(d.contract("e").unwrap().g_tutte().to_string(), "x + 2y + 2");
        let dc = d.check_del_con("e").unwrap();
        assert_eq!(dc.case, DelConCase::Generic);
        assert!(dc.holds);
    }

    #[test]
    fn running_rho() {
        let d = running_example();
        let t = d.triple();
        assert_eq!(d.rho(Subset::EMPTY, set(t, "ab")).unwrap(), BigInt::from(3));
        assert_eq!(d.rho(set(t, "ab"), set(t, "ab")).unwrap(), BigInt::from(4));
        assert!(t.is_molecule(&Molecule {
            r: Subset::EMPTY,
            f: set(t, "ab"),
            t: Subset::EMPTY
        }));
    }

    #[test]
    fn running_axioms() {
        let d = running_example();
        let rep = d.check_axioms();
        assert!(rep.locally_ranked);
        assert!(!rep.semimatroid);
        assert!(rep.report.violations.iter().any(|v| v.axiom == "CR1"
            && v.witness.starts_with("X={a,b,c}, Y={a,b,e}")));
        assert!(rep.p && rep.a11 && rep.a12 && rep.a2, "{}", rep.report);
        assert!(matches!(d.crapo_decomposition(None), Err(Error::Precondition(_))));
    }

    #[test]
    fn contraction_family() {
        let d = running_example();
        let c = d.contract("e").unwrap();
        let t = c.triple();
        assert_eq!(t.labels(), &["a", "b", "d"]);
        let sets: Vec<String> = t.central_sets().map(|s| t.fmt_set(s)).collect();
        assert_eq!(sets, vec!["{}", "{a}", "{b}", "{a,b}", "{d}"]);
        assert_eq!(c.mult(set(t, "ab")), &BigInt::from(2));
        assert_eq!(c.rank(set(t, "ab")), Some(1));
    }

    #[test]
    fn single_element_cases() {
        let coloop = QuotientData::trivial(LocallyRankedTriple::matroid(letter_labels(1), |s| s.len()).unwrap());
        let dc = coloop.check_del_con("a").unwrap();
        assert_eq!(dc.case, DelConCase::Isthmus);
        assert!(dc.holds);
        assert_eq!(dc.tutte.to_string(), "x");
        let lp = QuotientData::trivial(LocallyRankedTriple::matroid(letter_labels(1), |_| 0).unwrap());
        let dc = lp.check_del_con("a").unwrap();
        assert_eq!(dc.case, DelConCase::Loop);
        assert!(dc.holds);
        assert_eq!(dc.tutte.to_string(), "y");
        assert!(lp.delete("z").is_err());
    }

    #[test]
    fn trivial_multiplicity_is_classical() {
        let t = LocallyRankedTriple::matroid(letter_labels(4), |s| s.len().min(2)).unwrap();
        let d = QuotientData::trivial(t.clone());
        assert_eq!(d.g_tutte(), t.tutte());
        assert!(d.check_axioms().all_pass());
        assert_eq!(d.crapo_decomposition(None).unwrap(), t.activity_tutte(None).unwrap());
    }

    #[test]
    fn single_orbit_with_three_layers() {
        let t = LocallyRankedTriple::matroid(letter_labels(1), |s| s.len()).unwrap();
        let d = QuotientData::from_fn(t, |s| if s.is_empty() { BigInt::one() } else { BigInt::from(3) }).unwrap();
        let labels: Vec<String> = ["0", "p", "q", "r"].iter().map(|s| s.to_string()).collect();
        let poset = FinitePoset::from_relations(labels, &[(0, 1), (0, 2), (0, 3)], None).unwrap();
        let mut kappa = HashMap::new();
        kappa.insert(Subset::EMPTY, vec![0]);
        kappa.insert(Subset::singleton(0), vec![1, 2, 3]);
        let support = vec![Subset::EMPTY, Subset::singleton(0), Subset::singleton(0), Subset::singleton(0)];
        let d = d.with_layers(Layers { poset, support, kappa }).unwrap();
        assert_eq!(d.layer_char_poly().unwrap().to_string(), "t - 3");
        assert!(d.check_theorem_cp_data().unwrap());
    }
}
