//! Matroids over `Z`: an abelian group for every subset and a surjection
//! `M(A) → M(A ∪ e)` for every `e ∉ A`, such that every square is a pushout of
//! surjections with cyclic kernel.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::QuotientData;
use crate::error::{Error, Result};
use crate::exact_lattice::{pushout, surjections_with_cyclic_kernel, FgAbGroup, GroupMap, IntMatrix, Presentation};
use crate::periodic::PeriodicArrangement;
use crate::report::Report;
use crate::semimatroid::LocallyRankedTriple;
use crate::subset::{format_set, Subset, MAX_GROUND};

#[derive(Clone, Debug)]
pub struct ZMatroid {
    labels: Vec<String>,
    modules: Vec<Presentation>,
    maps: HashMap<(Subset, usize), GroupMap>,
}

impl ZMatroid {
    /// Builds a matroid over `Z` from explicit data. `maps` must hold the
    /// generator-image matrix of `M(A) → M(A ∪ e)` for every `A` and `e ∉ A`.
    pub fn new(
        labels: Vec<String>,
        modules: Vec<Presentation>,
        maps: &HashMap<(Subset, usize), IntMatrix>,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n, MAX_GROUND));
        }
        if modules.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: modules.len(),
            });
        }
        let mut built = HashMap::new();
        for a in Subset::full(n).subsets() {
            for e in (0..n).filter(|&e| !a.contains(e)) {
                let m = maps.get(&(a, e)).ok_or_else(|| {
                    Error::InvalidInput(format!("missing map from {} adding {}", format_set(&labels, a), labels[e]))
                })?;
                let f = GroupMap::new(
                    modules[a.bits() as usize].clone(),
                    modules[a.with(e).bits() as usize].clone(),
                    m.clone(),
                )?;
                built.insert((a, e), f);
            }
        }
        Ok(ZMatroid {
            labels,
            modules,
            maps: built,
        })
    }

    /// `M(I) = Z^{I^c} / A[I^c]^T Z^d`, with coordinate projections as maps.
    pub fn from_matrix(a: &IntMatrix) -> Result<Self> {
        let n = a.cols();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n, MAX_GROUND));
        }
        let full = Subset::full(n);
        let modules: Vec<Presentation> = full
            .subsets()
            .map(|i| {
                let rest: Vec<usize> = full.difference(i).iter().collect();
                Presentation::new(rest.len(), a.select_columns(&rest).transpose())
            })
            .collect();
        let mut maps = HashMap::new();
        for i in full.subsets() {
            let rest: Vec<usize> = full.difference(i).iter().collect();
            for (pos, &e) in rest.iter().enumerate() {
                let mut m = IntMatrix::zeros(rest.len() - 1, rest.len());
                for c in 0..rest.len() {
                    if c != pos {
                        m[(if c < pos { c } else { c - 1 }, c)] = BigInt::one();
                    }
                }
                maps.insert((i, e), m);
            }
        }
        Self::new((1..=n).map(|i| i.to_string()).collect(), modules, &maps)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn presentation_of(&self, a: Subset) -> &Presentation {
        &self.modules[a.bits() as usize]
    }

    pub fn module_of(&self, a: Subset) -> &FgAbGroup {
        self.presentation_of(a).group()
    }

    pub fn canonical_map(&self, a: Subset, e: usize) -> Option<&GroupMap> {
        self.maps.get(&(a, e))
    }

    /// Checks every canonical map and every square over `(A, e1, e2)`.
    pub fn check(&self) -> Report {
        let mut report = Report::new();
        let n = self.n();
        let fmt = |s: Subset| format_set(&self.labels, s);
        let mut keys: Vec<&(Subset, usize)> = self.maps.keys().collect();
        keys.sort_by_key(|(a, e)| (a.len(), a.bits(), *e));
        for &(a, e) in keys {
            let f = &self.maps[&(a, e)];
            if !f.is_surjective() {
                report.push("surjective", format!("M({}) -> M({}) is not onto", fmt(a), fmt(a.with(e))));
            }
            if !f.kernel_is_cyclic() {
                report.push(
                    "cyclic kernel",
                    format!("M({}) -> M({}) has kernel {}", fmt(a), fmt(a.with(e)), f.kernel()),
                );
            }
        }
        for a in Subset::full(n).subsets() {
            for e1 in (0..n).filter(|&e| !a.contains(e)) {
                for e2 in (e1 + 1..n).filter(|&e| !a.contains(e)) {
                    let (f, g) = (&self.maps[&(a, e1)], &self.maps[&(a, e2)]);
                    let (h1, h2) = (&self.maps[&(a.with(e1), e2)], &self.maps[&(a.with(e2), e1)]);
                    if let Err(w) = square_is_pushout(f, g, h1, h2) {
                        let axiom = if w == "does not commute" { "commutes" } else { "pushout" };
                        report.push(axiom, format!("square over {} adding {}, {}: {w}", fmt(a), self.labels[e1], self.labels[e2]));
                    }
                }
            }
        }
        report
    }

    /// `rk(A) = rank M(∅) − rank M(A)` and `m(A) = |torsion of M(A)|`.
    pub fn underlying_arithmetic(&self) -> Result<QuotientData> {
        let total = self.module_of(Subset::EMPTY).free_rank();
        let rank = |a: Subset| total.saturating_sub(self.module_of(a).free_rank());
        let triple = LocallyRankedTriple::matroid(self.labels.clone(), rank)?;
        QuotientData::from_fn(triple, |a| self.module_of(a).torsion_order())
    }
}

/// `Ok` when `h1 ∘ f = h2 ∘ g` and the induced map from the pushout of `f, g`
/// to the common target is an isomorphism; `Err` carries the reason.
fn square_is_pushout(f: &GroupMap, g: &GroupMap, h1: &GroupMap, h2: &GroupMap) -> std::result::Result<(), String> {
    let (Ok(left), Ok(right)) = (f.then(h1), g.then(h2)) else {
        return Err("maps do not compose".into());
    };
    if !left.same_map(&right) {
        return Err("does not commute".into());
    }
    let p = pushout(f, g).map_err(|e| e.to_string())?;
    let induced = GroupMap::new(p.presentation.clone(), h1.target().clone(), h1.matrix().hstack(h2.matrix()))
        .map_err(|e| e.to_string())?;
    if induced.is_isomorphism() {
        Ok(())
    } else {
        Err(format!("pushout is {} but the corner is {}", p.group, h1.target().group()))
    }
}

pub fn check_zmatroid(m: &ZMatroid) -> Report {
    m.check()
}

/// Compares the underlying arithmetic matroid of [`ZMatroid::from_matrix`]
/// with the dual of the arithmetic matroid of the centered arrangement.
pub fn check_duality(a: &IntMatrix) -> Result<bool> {
    let z = ZMatroid::from_matrix(a)?.underlying_arithmetic()?;
    let x = PeriodicArrangement::with_loops(a.clone(), None)?.arithmetic_matroid()?;
    let full = Subset::full(a.cols());
    let rz_full = z.rank(full).expect("matroid");
    Ok(full.subsets().all(|i| {
        let c = full.difference(i);
        z.mult(i) == x.mult(c) && x.rank(c).expect("matroid") + rz_full == c.len() + z.rank(i).expect("matroid")
    }))
}

/// `M(A) ≅ Z^{|A^c| − rk(A^c)} ⊕ W(A^c)/I(A^c)` for every `A`.
pub fn check_purity(a: &IntMatrix) -> Result<bool> {
    let z = ZMatroid::from_matrix(a)?;
    let arr = PeriodicArrangement::with_loops(a.clone(), None)?;
    let full = Subset::full(a.cols());
    for s in full.subsets() {
        let c = full.difference(s);
        let w = arr.w_lattice(c).expect("centered");
        let torsion = w.relative_quotient(&arr.i_lattice(c))?;
        let expected = FgAbGroup::free(c.len() - arr.rank(c)).direct_sum(&torsion);
        if z.module_of(s) != &expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four groups and maps of a square
///
/// ```text
/// tl --top--> tr
/// |           |
/// left      right
/// v           v
/// bl --bottom--> br
/// ```
///
/// where any map may be left unknown.
#[derive(Clone, Debug)]
pub struct SquareDiagram {
    pub tl: Presentation,
    pub tr: Presentation,
    pub bl: Presentation,
    pub br: Presentation,
    pub top: Option<IntMatrix>,
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
    pub bottom: Option<IntMatrix>,
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub top: GroupMap,
    pub left: GroupMap,
    pub right: GroupMap,
    pub bottom: GroupMap,
    pub commutes: bool,
    pub pushout: bool,
}

#[derive(Clone, Debug)]
pub struct SquareReport {
    pub completions: Vec<Completion>,
}

impl SquareReport {
    pub fn satisfiable(&self) -> bool {
        self.completions.iter().any(|c| c.pushout)
    }
}

impl SquareDiagram {
    /// Square on the standard presentations of four groups.
    pub fn from_groups(groups: [&FgAbGroup; 4], maps: [Option<IntMatrix>; 4]) -> Self {
        let [tl, tr, bl, br] = groups.map(FgAbGroup::presentation);
        let [top, left, right, bottom] = maps;
        SquareDiagram {
            tl,
            tr,
            bl,
            br,
            top,
            left,
            right,
            bottom,
        }
    }
}

fn arrow_choices(src: &Presentation, tgt: &Presentation, given: &Option<IntMatrix>) -> Result<Vec<GroupMap>> {
    match given {
        Some(m) => Ok(vec![GroupMap::new(src.clone(), tgt.clone(), m.clone())?]),
        None => surjections_with_cyclic_kernel(src, tgt),
    }
}

/// Fills every unknown arrow with each surjection with cyclic kernel and
/// reports, for each filling, whether the square commutes and is a pushout.
pub fn complete_square(sq: &SquareDiagram) -> Result<SquareReport> {
    let tops = arrow_choices(&sq.tl, &sq.tr, &sq.top)?;
    let lefts = arrow_choices(&sq.tl, &sq.bl, &sq.left)?;
    let rights = arrow_choices(&sq.tr, &sq.br, &sq.right)?;
    let bottoms = arrow_choices(&sq.bl, &sq.br, &sq.bottom)?;
    let mut completions = Vec::new();
    for top in &tops {
        for left in &lefts {
            for right in &rights {
                for bottom in &bottoms {
                    let verdict = square_is_pushout(top, left, right, bottom);
                    completions.push(Completion {
                        top: top.clone(),
                        left: left.clone(),
                        right: right.clone(),
                        bottom: bottom.clone(),
                        commutes: verdict.as_ref().map_or_else(|w| w != "does not commute", |_| true),
                        pushout: verdict.is_ok(),
                    });
                }
            }
        }
    }
    Ok(SquareReport { completions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    fn rev2() -> IntMatrix {
        IntMatrix::from_rows(&[[1, 1, 1], [1, -1, 0]])
    }

    #[test]
    fn rev2_modules() {
        let z = ZMatroid::from_matrix(&rev2()).unwrap();
        assert_eq!(z.module_of(Subset::EMPTY), &FgAbGroup::free(1));
        assert_eq!(z.module_of(s(&[2])), &FgAbGroup::cyclic(2));
        assert!(z.module_of(s(&[0, 1, 2])).is_trivial());
        assert!(check_zmatroid(&z).is_ok());
        let u = z.underlying_arithmetic().unwrap();
        assert_eq!(u.mult(s(&[2])), &BigInt::from(2));
        assert!(u.check_axioms().all_pass());
        assert!(check_duality(&rev2()).unwrap());
        assert!(check_purity(&rev2()).unwrap());
    }

    #[test]
    fn identity_is_self_dual_free() {
        let id = IntMatrix::identity(3);
        let u = ZMatroid::from_matrix(&id).unwrap().underlying_arithmetic().unwrap();
        for a in Subset::full(3).subsets() {
            assert_eq!(u.mult(a), &BigInt::one());
            // dual of the free matroid: every element is a loop
            assert_eq!(u.rank(a), Some(0));
        }
        assert!(check_duality(&id).unwrap());
    }

    #[test]
    fn empty_ground_set() {
        let z = ZMatroid::from_matrix(&IntMatrix::zeros(2, 0)).unwrap();
        assert!(z.module_of(Subset::EMPTY).is_trivial());
        assert!(check_zmatroid(&z).is_ok());
    }

    fn noalg_groups() -> [FgAbGroup; 4] {
        [FgAbGroup::free(1), FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), FgAbGroup::trivial()]
    }

    #[test]
    fn noalg_square_has_two_fillings_and_no_pushout() {
        let g = noalg_groups();
        let sq = SquareDiagram::from_groups(
            [&g[0], &g[1], &g[2], &g[3]],
            [None, None, Some(IntMatrix::zeros(0, 1)), Some(IntMatrix::zeros(0, 1))],
        );
        let r = complete_square(&sq).unwrap();
        assert_eq!(r.completions.len(), 2);
        assert!(r.completions.iter().all(|c| c.commutes && !c.pushout));
        assert!(!r.satisfiable());
        let lefts: Vec<String> = r.completions.iter().map(|c| c.left.matrix()[(0, 0)].to_string()).collect();
        assert_eq!(lefts, ["1", "3"]);
    }

    #[test]
    fn noalg_as_abstract_zmatroid_fails() {
        // ground {a, c} over the base set {b}
        let g = noalg_groups();
        let modules = vec![g[0].presentation(), g[2].presentation(), g[1].presentation(), g[3].presentation()];
        let one = IntMatrix::from_rows(&[[1]]);
        let maps = HashMap::from([
            ((s(&[]), 0), one.clone()),
            ((s(&[]), 1), one),
            ((s(&[0]), 1), IntMatrix::zeros(0, 1)),
            ((s(&[1]), 0), IntMatrix::zeros(0, 1)),
        ]);
        let z = ZMatroid::new(vec!["a".into(), "c".into()], modules, &maps).unwrap();
        let r = check_zmatroid(&z);
        assert_eq!(r.failing_axioms().into_iter().collect::<Vec<_>>(), ["pushout"]);
        assert!(r.violations[0].witness.contains("pushout is Z/2"));
    }

    #[test]
    fn identity_square_is_satisfiable() {
        let z2 = FgAbGroup::cyclic(2);
        let id = Some(IntMatrix::identity(1));
        let sq = SquareDiagram::from_groups([&z2, &z2, &z2, &z2], [id.clone(), id.clone(), id.clone(), id]);
        let r = complete_square(&sq).unwrap();
        assert_eq!(r.completions.len(), 1);
        assert!(r.satisfiable());
    }

    #[test]
    fn both_verticals_unknown() {
        // Z -> Z/2 on top and bottom, unknown Z -> Z on the left and Z/2 -> Z/2 on the right
        let (z, z2) = (FgAbGroup::free(1), FgAbGroup::cyclic(2));
        let one = Some(IntMatrix::from_rows(&[[1]]));
        let sq = SquareDiagram::from_groups([&z, &z2, &z, &z2], [one.clone(), None, None, one]);
        let r = complete_square(&sq).unwrap();
        // oracle: generator images of Z -> Z in a window, onto iff the image is ±1
        let onto_z = (-5i64..=5).filter(|x| x.abs() == 1).count();
        let onto_z2 = (0i64..2).filter(|x| x % 2 == 1).count();
        assert_eq!(r.completions.len(), onto_z * onto_z2);
        assert!(r.completions.iter().all(|c| c.pushout));
    }

    #[test]
    fn non_cyclic_source_with_infinite_target_is_rejected() {
        let (z2, z) = (FgAbGroup::free(2), FgAbGroup::free(1));
        let sq = SquareDiagram::from_groups([&z2, &z, &z, &z], [None, None, None, None]);
        assert!(matches!(complete_square(&sq), Err(Error::NotEnumerable)));
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=3, 1usize..=4, proptest::collection::vec(-3i64..=3, 12)).prop_map(|(d, n, e)| {
            let rows: Vec<Vec<i64>> = (0..d).map(|i| e[i * 4..i * 4 + n].to_vec()).collect();
            IntMatrix::from_rows(&rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn realizable_data_is_a_zmatroid(m in arb_matrix()) {
            let z = ZMatroid::from_matrix(&m).unwrap();
            prop_assert!(check_zmatroid(&z).is_ok());
            prop_assert!(z.underlying_arithmetic().unwrap().check_axioms().all_pass());
            prop_assert!(check_duality(&m).unwrap());
            prop_assert!(check_purity(&m).unwrap());
        }
    }
}
