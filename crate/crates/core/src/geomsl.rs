//! Finite posets, Möbius functions, characteristic polynomials, geometric
//! (semi)lattice recognition and the passage between simple semimatroids and
//! geometric semilattices.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::report::Report;
use crate::semimatroid::LocallyRankedTriple;
use crate::subset::{Subset, MAX_GROUND};

/// A finite partial order stored as its full comparability matrix plus the
/// derived cover relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ranks: Option<Vec<usize>>,
}

impl FinitePoset {
    /// Builds a poset from an order predicate, which must be reflexive,
    /// antisymmetric and transitive. Ranks are taken as given.
    pub fn from_order(labels: Vec<String>, ranks: Option<Vec<usize>>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b || leq(a, b)).collect()).collect();
        let mut p = FinitePoset {
            labels,
            leq,
            up: vec![],
            down: vec![],
            ranks: None,
        };
        p.compute_covers();
        p.ranks = ranks.or_else(|| p.derived_ranks());
        p
    }

    /// Builds a poset from a list of relations `a < b` (covers or any
    /// generating set). With `ranks` given, every cover must raise it by one.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)], ranks: Option<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("relation ({a}, {b}) out of range")));
            }
            leq[a][b] = true;
        }
        // Warshall transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(Error::InvalidInput(format!(
                        "order relation has a cycle through {} and {}",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        let mut p = FinitePoset {
            labels,
            leq,
            up: vec![],
            down: vec![],
            ranks: None,
        };
        p.compute_covers();
        match ranks {
            Some(r) => {
                if r.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: r.len(),
                    });
                }
                for a in 0..n {
                    for &b in &p.up[a] {
                        if r[b] != r[a] + 1 {
                            return Err(Error::InvalidInput(format!(
                                "{} covers {} but ranks are {} and {}",
                                p.labels[b], p.labels[a], r[b], r[a]
                            )));
                        }
                    }
                }
                p.ranks = Some(r);
            }
            None => p.ranks = p.derived_ranks(),
        }
        Ok(p)
    }

    fn compute_covers(&mut self) {
        let n = self.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    up[a].push(b);
                    down[b].push(a);
                }
            }
        }
        self.up = up;
        self.down = down;
    }

    /// Longest chain length from a minimal element, if that makes every cover
    /// raise the rank by exactly one.
    fn derived_ranks(&self) -> Option<Vec<usize>> {
        let order = self.linear_extension();
        let mut r = vec![0usize; self.len()];
        for &x in &order {
            r[x] = self.down[x].iter().map(|&y| r[y] + 1).max().unwrap_or(0);
        }
        let ok = (0..self.len()).all(|a| self.up[a].iter().all(|&b| r[b] == r[a] + 1));
        ok.then_some(r)
    }

    /// Elements sorted so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&a| (0..self.len()).filter(|&b| self.leq[b][a]).count());
        idx
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    /// All cover pairs `(a, b)` with `b` covering `a`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.up[a].iter().map(move |&b| (a, b))).collect()
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.ranks.as_deref()
    }

    pub fn rank(&self, a: usize) -> Option<usize> {
        self.ranks.as_ref().map(|r| r[a])
    }

    pub fn is_ranked(&self) -> bool {
        self.ranks.is_some()
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.ranks.as_ref().map(|r| r.iter().copied().max().unwrap_or(0))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.up[a].is_empty()).collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom() {
            Some(z) => self.up[z].clone(),
            None => Vec::new(),
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&c| self.leq[c][a] && self.leq[c][b]).collect();
        lower.iter().copied().find(|&c| lower.iter().all(|&d| self.leq[d][c]))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&c| self.leq[a][c] && self.leq[b][c]).collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.leq[c][d]))
    }

    /// Least upper bound of a set; the empty set joins to the bottom.
    pub fn join_all(&self, xs: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&c| xs.iter().all(|&a| self.leq[a][c]))
            .collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.leq[c][d]))
    }

    /// `μ(a, x)` for every `x >= a` (entries for other `x` are `None`).
    pub fn mobius_row(&self, a: usize) -> Vec<Option<BigInt>> {
        let mut mu: Vec<Option<BigInt>> = vec![None; self.len()];
        for x in self.linear_extension() {
            if !self.leq[a][x] {
                continue;
            }
            if x == a {
                mu[x] = Some(BigInt::one());
                continue;
            }
            let s: BigInt = (0..self.len())
                .filter(|&z| z != x && self.leq[a][z] && self.leq[z][x])
                .map(|z| mu[z].clone().expect("visited earlier in the linear extension"))
                .sum();
            mu[x] = Some(-s);
        }
        mu
    }

    pub fn mobius(&self, a: usize, b: usize) -> Result<BigInt> {
        if !self.leq[a][b] {
            return Err(Error::Precondition(format!(
                "{} is not below {}",
                self.labels[a], self.labels[b]
            )));
        }
        Ok(self.mobius_row(a)[b].clone().expect("a <= b"))
    }

    /// `Σ_p μ(0̂, p) t^{r - rk(p)}` with `r` the given top rank or the largest rank.
    pub fn char_poly(&self, top_rank: Option<usize>) -> Result<UniPoly> {
        let ranks = self
            .ranks
            .as_ref()
            .ok_or_else(|| Error::Precondition("characteristic polynomial of an unranked poset".into()))?;
        let z = self
            .bottom()
            .ok_or_else(|| Error::Precondition("poset has no bottom element".into()))?;
        let r = top_rank.unwrap_or_else(|| ranks.iter().copied().max().unwrap_or(0));
        let mu = self.mobius_row(z);
        let mut p = UniPoly::zero();
        for (x, m) in mu.into_iter().enumerate() {
            let m = m.expect("bottom is below everything");
            if ranks[x] > r {
                return Err(Error::Precondition(format!("rank of {} exceeds {r}", self.labels[x])));
            }
            p.add_term((r - ranks[x]) as u32, m);
        }
        Ok(p)
    }

    /// The subposet on `elems` (kept in the given order).
    pub fn subposet(&self, elems: &[usize]) -> FinitePoset {
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        let ranks = self.ranks.as_ref().map(|r| {
            let base = elems.iter().map(|&a| r[a]).min().unwrap_or(0);
            elems.iter().map(|&a| r[a] - base).collect()
        });
        FinitePoset::from_order(labels, ranks, |i, j| self.leq[elems[i]][elems[j]])
    }

    /// The closed interval `[a, b]`.
    pub fn interval(&self, a: usize, b: usize) -> FinitePoset {
        let elems: Vec<usize> = (0..self.len()).filter(|&c| self.leq[a][c] && self.leq[c][b]).collect();
        self.subposet(&elems)
    }

    /// Lattice, ranked, atomic and semimodular (`rk(x∨y) + rk(x∧y) <= rk x + rk y`).
    pub fn check_geometric_lattice(&self) -> Report {
        let mut rep = Report::new();
        if self.is_empty() {
            rep.push("lattice", "empty poset".into());
            return rep;
        }
        let n = self.len();
        let mut meets = vec![vec![None; n]; n];
        let mut joins = vec![vec![None; n]; n];
        let mut lattice = true;
        for a in 0..n {
            for b in a..n {
                let m = self.meet(a, b);
                let j = self.join(a, b);
                if m.is_none() {
                    rep.push("lattice", format!("{} and {} have no meet", self.labels[a], self.labels[b]));
                    lattice = false;
                }
                if j.is_none() {
                    rep.push("lattice", format!("{} and {} have no join", self.labels[a], self.labels[b]));
                    lattice = false;
                }
                meets[a][b] = m;
                joins[a][b] = j;
            }
        }
        let Some(ranks) = &self.ranks else {
            rep.push("ranked", "poset is not ranked".into());
            return rep;
        };
        if !lattice {
            return rep;
        }
        let bottom = self.bottom().expect("a finite lattice has a bottom");
        let atoms = self.atoms();
        for x in 0..n {
            let below: Vec<usize> = atoms.iter().copied().filter(|&a| self.leq[a][x]).collect();
            let j = if below.is_empty() { Some(bottom) } else { self.join_all(&below) };
            if j != Some(x) {
                rep.push("atomic", format!("{} is not a join of atoms", self.labels[x]));
            }
        }
        for a in 0..n {
            for b in a..n {
                let (m, j) = (meets[a][b].unwrap(), joins[a][b].unwrap());
                if ranks[j] + ranks[m] > ranks[a] + ranks[b] {
                    rep.push(
                        "semimodular",
                        format!(
                            "rk({}∨{}) + rk({}∧{}) = {} > {}",
                            self.labels[a],
                            self.labels[b],
                            self.labels[a],
                            self.labels[b],
                            ranks[j] + ranks[m],
                            ranks[a] + ranks[b]
                        ),
                    );
                }
            }
        }
        rep
    }

    /// Sets of atoms (as index lists into `atoms`) that are independent: their
    /// join exists and has rank equal to their size. Only sizes up to the
    /// largest rank are considered.
    fn independent_atom_sets(&self, atoms: &[usize]) -> Vec<(Subset, usize)> {
        let ranks = self.ranks.as_ref().expect("ranked");
        let bound = self.max_rank().unwrap_or(0);
        let mut out = Vec::new();
        for s in Subset::full(atoms.len()).subsets() {
            if s.len() > bound {
                continue;
            }
            let xs: Vec<usize> = s.iter().map(|i| atoms[i]).collect();
            if let Some(j) = self.join_all(&xs) {
                if ranks[j] == s.len() {
                    out.push((s, j));
                }
            }
        }
        out
    }

    /// Meet-semilattice, ranked, (G3) and (G4); additionally compares with the
    /// (G1) + (G2) formulation and reports any disagreement.
    pub fn check_geometric_semilattice(&self) -> Report {
        let mut rep = Report::new();
        if self.is_empty() {
            rep.push("meet-semilattice", "empty poset".into());
            return rep;
        }
        let n = self.len();
        let Some(bottom) = self.bottom() else {
            rep.push("meet-semilattice", "no bottom element".into());
            return rep;
        };
        for a in 0..n {
            for b in a + 1..n {
                if self.meet(a, b).is_none() {
                    rep.push(
                        "meet-semilattice",
                        format!("{} and {} have no meet", self.labels[a], self.labels[b]),
                    );
                }
            }
        }
        if !rep.is_ok() {
            return rep;
        }
        let Some(ranks) = self.ranks.clone() else {
            rep.push("ranked", "poset is not ranked".into());
            return rep;
        };
        if ranks[bottom] != 0 {
            rep.push("ranked", format!("bottom {} has rank {}", self.labels[bottom], ranks[bottom]));
            return rep;
        }
        for x in self.maximal_elements() {
            let sub = self.check_geometric_lattice_interval(bottom, x);
            if !sub.is_ok() {
                rep.push(
                    "G3",
                    format!("interval [{}, {}] is not a geometric lattice: {}", self.labels[bottom], self.labels[x], sub.violations[0].axiom),
                );
            }
        }
        let atoms = self.atoms();
        if atoms.len() > MAX_GROUND {
            rep.push("G4", format!("{} atoms exceed the enumeration limit {}", atoms.len(), MAX_GROUND));
            return rep;
        }
        let indep = self.independent_atom_sets(&atoms);
        for &(s, j) in &indep {
            for x in 0..n {
                if ranks[x] >= ranks[j] {
                    continue;
                }
                let ok = s
                    .iter()
                    .map(|i| atoms[i])
                    .any(|a| !self.leq[a][x] && self.join(x, a).is_some());
                if !ok {
                    rep.push(
                        "G4",
                        format!(
                            "independent atoms {{{}}} and {}: no atom a with a ≰ x and x∨a defined",
                            s.iter().map(|i| self.labels[atoms[i]].as_str()).collect::<Vec<_>>().join(","),
                            self.labels[x]
                        ),
                    );
                }
            }
        }
        let g34 = rep.is_ok();
        let g12 = self.satisfies_g1_g2(bottom, &atoms, &indep);
        if g34 != g12 {
            rep.push(
                "G1G2-crosscheck",
                format!("(G3)+(G4) gives {g34} but (G1)+(G2) gives {g12}"),
            );
        }
        rep
    }

    fn check_geometric_lattice_interval(&self, a: usize, b: usize) -> Report {
        self.interval(a, b).check_geometric_lattice()
    }

    fn satisfies_g1_g2(&self, bottom: usize, atoms: &[usize], indep: &[(Subset, usize)]) -> bool {
        // (G1): every element is the join of the atoms below it
        let g1 = (0..self.len()).all(|x| {
            let below: Vec<usize> = atoms.iter().copied().filter(|&a| self.leq[a][x]).collect();
            let j = if below.is_empty() { Some(bottom) } else { self.join_all(&below) };
            j == Some(x)
        });
        if !g1 {
            return false;
        }
        // (G2): independent sets are closed under subsets and satisfy augmentation
        let family: std::collections::HashSet<Subset> = indep.iter().map(|&(s, _)| s).collect();
        if !family.contains(&Subset::EMPTY) {
            return false;
        }
        for &s in &family {
            if s.iter().any(|i| !family.contains(&s.without(i))) {
                return false;
            }
            for &t in &family {
                if s.len() < t.len() && !t.difference(s).iter().any(|i| family.contains(&s.with(i))) {
                    return false;
                }
            }
        }
        true
    }

    /// Hasse diagram in DOT. `node_label` overrides the default label.
    pub fn to_dot(&self, name: &str, node_label: Option<&dyn Fn(usize) -> String>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for a in 0..self.len() {
            let label = node_label.map_or_else(|| self.labels[a].clone(), |f| f(a));
            let label = label.replace('\\', "\\\\").replace('"', "\\\"");
            match self.rank(a) {
                Some(r) => {
                    let _ = writeln!(out, "  n{a} [label=\"{label}\", rank={r}];");
                }
                None => {
                    let _ = writeln!(out, "  n{a} [label=\"{label}\"];");
                }
            }
        }
        for (a, b) in self.cover_pairs() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Checks that `map` is a bijection `p -> q` with `a <= b` iff `map[a] <= map[b]`.
pub fn is_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &m in map {
        if m >= q.len() || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

/// Some isomorphism `p -> q`, found by backtracking over candidates with equal
/// rank, up/down degree and down-set size.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let sig = |x: &FinitePoset, a: usize| {
        let below = (0..x.len()).filter(|&b| x.leq(b, a)).count();
        let above = (0..x.len()).filter(|&b| x.leq(a, b)).count();
        (x.rank(a), x.upper_covers(a).len(), x.lower_covers(a).len(), below, above)
    };
    let sp: Vec<_> = (0..p.len()).map(|a| sig(p, a)).collect();
    let sq: Vec<_> = (0..q.len()).map(|a| sig(q, a)).collect();
    let mut hist: HashMap<_, isize> = HashMap::new();
    for s in &sp {
        *hist.entry(*s).or_default() += 1;
    }
    for s in &sq {
        *hist.entry(*s).or_default() -= 1;
    }
    if hist.values().any(|&c| c != 0) {
        return None;
    }
    let order = p.linear_extension();
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];

    fn go(
        k: usize,
        order: &[usize],
        p: &FinitePoset,
        q: &FinitePoset,
        sp: &[(Option<usize>, usize, usize, usize, usize)],
        sq: &[(Option<usize>, usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for c in 0..q.len() {
            if used[c] || sp[a] != sq[c] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&b| p.leq(a, b) == q.leq(c, map[b]) && p.leq(b, a) == q.leq(map[b], c));
            if !consistent {
                continue;
            }
            map[a] = c;
            used[c] = true;
            if go(k + 1, order, p, q, sp, sq, map, used) {
                return true;
            }
            used[c] = false;
            map[a] = usize::MAX;
        }
        false
    }

    go(0, &order, p, q, &sp, &sq, &mut map, &mut used).then_some(map)
}

/// The semimatroid of a geometric semilattice: ground set the atoms, a set
/// central when its join exists, with the rank of that join.
pub fn semilattice_to_semimatroid(p: &FinitePoset) -> Result<(LocallyRankedTriple, Vec<usize>)> {
    let rep = p.check_geometric_semilattice();
    if !rep.is_ok() {
        return Err(Error::AxiomViolation {
            axiom: rep.violations[0].axiom.clone(),
            witness: rep.violations[0].witness.clone(),
        });
    }
    let atoms = p.atoms();
    if atoms.len() > MAX_GROUND {
        return Err(Error::GroundTooLarge(atoms.len(), MAX_GROUND));
    }
    let bottom = p.bottom().expect("checked");
    let labels: Vec<String> = atoms.iter().map(|&a| p.label(a).to_string()).collect();
    let mut central = Vec::new();
    for s in Subset::full(atoms.len()).subsets() {
        let xs: Vec<usize> = s.iter().map(|i| atoms[i]).collect();
        let j = if xs.is_empty() { Some(bottom) } else { p.join_all(&xs) };
        if let Some(j) = j {
            central.push((s, p.rank(j).expect("ranked")));
        }
    }
    Ok((LocallyRankedTriple::new(labels, &central)?, atoms))
}

pub fn flats_to_semilattice(t: &LocallyRankedTriple) -> Result<FinitePoset> {
    let rep = t.validate();
    if !rep.is_ok() {
        return Err(Error::AxiomViolation {
            axiom: rep.violations[0].axiom.clone(),
            witness: rep.violations[0].witness.clone(),
        });
    }
    Ok(t.flats_poset())
}

/// Round trip starting from a simple semimatroid. Returns the map from the
/// ground set of `t` to the ground set of the reconstructed semimatroid
/// (`e` goes to the atom `{e}`), after verifying it preserves centrality and rank.
pub fn roundtrip_semimatroid(t: &LocallyRankedTriple) -> Result<Vec<usize>> {
    if !t.is_simple() {
        return Err(Error::Precondition("round trip needs a simple semimatroid".into()));
    }
    let p = flats_to_semilattice(t)?;
    let (back, atoms) = semilattice_to_semimatroid(&p)?;
    let flats = t.flats();
    let map: Vec<usize> = (0..t.n())
        .map(|e| {
            let idx = flats.iter().position(|&f| f == Subset::singleton(e)).expect("simple: {e} is a flat");
            atoms.iter().position(|&a| a == idx).expect("a rank-one flat is an atom")
        })
        .collect();
    if back.n() != t.n() {
        return Err(Error::Precondition("reconstructed ground set has a different size".into()));
    }
    for s in Subset::full(t.n()).subsets() {
        let image = Subset::from_indices(s.iter().map(|e| map[e]));
        if t.rank(s) != back.rank(image) {
            return Err(Error::Precondition(format!(
                "round trip changes {}",
                t.fmt_set(s)
            )));
        }
    }
    Ok(map)
}

/// Round trip starting from a geometric semilattice, via `x ↦ {atoms below x}`.
/// Returns the verified isomorphism from `p` to the rebuilt flat poset.
pub fn roundtrip_semilattice(p: &FinitePoset) -> Result<Vec<usize>> {
    let (t, atoms) = semilattice_to_semimatroid(p)?;
    let q = flats_to_semilattice(&t)?;
    let flats = t.flats();
    let mut map = Vec::with_capacity(p.len());
    for x in 0..p.len() {
        let phi = Subset::from_indices((0..atoms.len()).filter(|&i| p.leq(atoms[i], x)));
        let Some(idx) = flats.iter().position(|&f| f == phi) else {
            return Err(Error::Precondition(format!("atoms below {} do not form a flat", p.label(x))));
        };
        map.push(idx);
    }
    if !is_isomorphism(p, &q, &map) {
        return Err(Error::Precondition("atom map is not an isomorphism".into()));
    }
    Ok(map)
}

/// Boolean lattice on `n` atoms.
pub fn boolean_lattice(n: usize) -> FinitePoset {
    let labels = Subset::full(n).subsets().map(|s| format!("{:?}", s)).collect();
    let sets: Vec<Subset> = Subset::full(n).subsets().collect();
    let ranks = sets.iter().map(|s| s.len()).collect();
    FinitePoset::from_order(labels, Some(ranks), |a, b| sets[a].is_subset(sets[b]))
}

/// A one-element poset whose element has rank zero.
pub fn is_single_point(p: &FinitePoset) -> bool {
    p.len() == 1 && p.rank(0).is_none_or(|r| r.is_zero())
}
