//! The players' logic as a finite orthocomplemented lattice, and its
//! realization by subspaces of the real plane.
//!
//! The Wise Alice lattice has a bottom `O`, a top `I`, and four atoms
//! `1..4` with complements `1' = 3` and `2' = 4`. Any two distinct atoms
//! join to `I` and meet to `O`, so the lattice is not distributive:
//! `2 ∧ (1 ∨ 3) = 2` while `(2 ∧ 1) ∨ (2 ∧ 3) = O`.
//!
//! Everything here is stored extensionally and checked by enumeration.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, LatticeError};

/// Index of an element inside its lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrtholattice {
    labels: Vec<String>,
    order: BTreeSet<(usize, usize)>,
    complement: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteOrtholattice {
    /// Builds a lattice from its full order relation (`(x, y)` meaning
    /// `x ≤ y`) and its complement map.
    ///
    /// The relation must already be reflexive, antisymmetric and transitive,
    /// have a least and a greatest element, and the complement must be an
    /// involution. Orthocomplement laws that need meets and joins are
    /// reported by [`Self::laws`] instead of being enforced here.
    pub fn new(
        labels: &[&str],
        order: &[(&str, &str)],
        complement: &[(&str, &str)],
    ) -> Result<Self, LatticeError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let index = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
        };
        let n = labels.len();

        let mut rel = BTreeSet::new();
        for (x, y) in order {
            rel.insert((index(x)?, index(y)?));
        }
        for i in 0..n {
            if !rel.contains(&(i, i)) {
                return Err(LatticeError::NotPartialOrder(format!(
                    "not reflexive at `{}`",
                    labels[i]
                )));
            }
        }
        for &(x, y) in &rel {
            if x != y && rel.contains(&(y, x)) {
                return Err(LatticeError::NotPartialOrder(format!(
                    "`{}` and `{}` are mutually below each other",
                    labels[x], labels[y]
                )));
            }
        }
        for &(x, y) in &rel {
            for z in 0..n {
                if rel.contains(&(y, z)) && !rel.contains(&(x, z)) {
                    return Err(LatticeError::NotPartialOrder(format!(
                        "not transitive: {} ≤ {} ≤ {}",
                        labels[x], labels[y], labels[z]
                    )));
                }
            }
        }

        let bottom = (0..n)
            .find(|&b| (0..n).all(|y| rel.contains(&(b, y))))
            .ok_or(LatticeError::MissingBound("least"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|y| rel.contains(&(y, t))))
            .ok_or(LatticeError::MissingBound("greatest"))?;

        let mut comp = vec![usize::MAX; n];
        for (x, y) in complement {
            let (x, y) = (index(x)?, index(y)?);
            for (from, to) in [(x, y), (y, x)] {
                if comp[from] != usize::MAX && comp[from] != to {
                    return Err(LatticeError::BadComplement(format!(
                        "`{}` has two complements",
                        labels[from]
                    )));
                }
                comp[from] = to;
            }
        }
        if let Some(i) = comp.iter().position(|&c| c == usize::MAX) {
            return Err(LatticeError::BadComplement(format!(
                "`{}` has no complement",
                labels[i]
            )));
        }

        Ok(Self {
            labels,
            order: rel,
            complement: comp,
            bottom,
            top,
        })
    }

    /// Same as [`Self::new`] but takes only the covering pairs of the Hasse
    /// diagram and closes them reflexively and transitively.
    pub fn from_covers(
        labels: &[&str],
        covers: &[(&str, &str)],
        complement: &[(&str, &str)],
    ) -> Result<Self, LatticeError> {
        let mut pairs: BTreeSet<(&str, &str)> = covers.iter().copied().collect();
        pairs.extend(labels.iter().map(|&l| (l, l)));
        loop {
            let mut added = Vec::new();
            for &(x, y) in &pairs {
                for &(y2, z) in &pairs {
                    if y == y2 && !pairs.contains(&(x, z)) {
                        added.push((x, z));
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            pairs.extend(added);
        }
        let order: Vec<_> = pairs.into_iter().collect();
        Self::new(labels, &order, complement)
    }

    /// The lattice of Alice's questions and Bob's answers.
    pub fn wise_alice() -> Self {
        let atoms = ["1", "2", "3", "4"];
        let mut covers = Vec::new();
        for a in atoms {
            covers.push(("O", a));
            covers.push((a, "I"));
        }
        Self::from_covers(
            &["O", "1", "2", "3", "4", "I"],
            &covers,
            &[("O", "I"), ("1", "3"), ("2", "4")],
        )
        .expect("Wise Alice lattice is well formed")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.labels.len()).map(Elem)
    }

    pub fn element(&self, label: &str) -> Result<Elem, LatticeError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(Elem)
            .ok_or_else(|| LatticeError::UnknownElement(label.to_string()))
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.0]
    }

    pub fn bottom(&self) -> Elem {
        Elem(self.bottom)
    }

    pub fn top(&self) -> Elem {
        Elem(self.top)
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.order.contains(&(x.0, y.0))
    }

    /// Elements that cover the bottom.
    pub fn atoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&a| {
                a.0 != self.bottom
                    && self
                        .elements()
                        .all(|z| z == a || z.0 == self.bottom || !self.leq(z, a))
            })
            .collect()
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Result<Elem, LatticeError> {
        let lower: Vec<Elem> = self
            .elements()
            .filter(|&z| self.leq(z, x) && self.leq(z, y))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&z| self.leq(z, g)))
            .ok_or_else(|| self.no_bound("greatest lower bound", x, y))
    }

    pub fn join(&self, x: Elem, y: Elem) -> Result<Elem, LatticeError> {
        let upper: Vec<Elem> = self
            .elements()
            .filter(|&z| self.leq(x, z) && self.leq(y, z))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&l| upper.iter().all(|&z| self.leq(l, z)))
            .ok_or_else(|| self.no_bound("least upper bound", x, y))
    }

    pub fn orthocomplement(&self, x: Elem) -> Elem {
        Elem(self.complement[x.0])
    }

    fn no_bound(&self, kind: &'static str, x: Elem, y: Elem) -> LatticeError {
        LatticeError::NoUniqueBound {
            kind,
            x: self.label(x).to_string(),
            y: self.label(y).to_string(),
        }
    }

    /// Checks every ortholattice law by enumeration.
    pub fn laws(&self) -> LawReport {
        let els: Vec<Elem> = self.elements().collect();
        let is_lattice = els
            .iter()
            .all(|&x| els.iter().all(|&y| self.meet(x, y).is_ok() && self.join(x, y).is_ok()));
        let involution = els
            .iter()
            .all(|&x| self.orthocomplement(self.orthocomplement(x)) == x);
        let order_reversing = els.iter().all(|&x| {
            els.iter().all(|&y| {
                !self.leq(x, y) || self.leq(self.orthocomplement(y), self.orthocomplement(x))
            })
        });
        let contradiction = els.iter().all(|&x| {
            self.meet(x, self.orthocomplement(x)).ok() == Some(self.bottom())
        });
        let excluded_middle = els.iter().all(|&x| {
            self.join(x, self.orthocomplement(x)).ok() == Some(self.top())
        });
        let de_morgan = els.iter().all(|&x| {
            els.iter().all(|&y| {
                let lhs = self.join(x, y).map(|j| self.orthocomplement(j));
                let rhs = self.meet(self.orthocomplement(x), self.orthocomplement(y));
                matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
            })
        });
        LawReport {
            // enforced by the constructor
            partial_order: true,
            bounded: true,
            is_lattice,
            involution,
            order_reversing,
            contradiction,
            excluded_middle,
            de_morgan,
        }
    }

    pub fn is_distributive_at(&self, x: Elem, y: Elem, z: Elem) -> Result<bool, LatticeError> {
        let lhs = self.meet(x, self.join(y, z)?)?;
        let rhs = self.join(self.meet(x, y)?, self.meet(x, z)?)?;
        Ok(lhs == rhs)
    }

    /// Returns a triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    ///
    /// Complementary pairs `z = y'` are tried first, so the witness exposes
    /// an element that is incompatible with a question pair; every other
    /// triple is searched afterwards.
    pub fn find_distributivity_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let els: Vec<Elem> = self.elements().collect();
        let violates = |x, y, z| matches!(self.is_distributive_at(x, y, z), Ok(false));
        for &y in &els {
            let z = self.orthocomplement(y);
            for &x in &els {
                if violates(x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
        for &x in &els {
            for &y in &els {
                for &z in &els {
                    if violates(x, y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Adds up atom weights pairwise and compares them with the truth
    /// value of the pair's join.
    ///
    /// `weights` are aligned with [`Self::atoms`] and must form a
    /// probability distribution.
    pub fn disjunction_paradox(&self, weights: &[f64]) -> crate::error::Result<DisjunctionReport> {
        let atoms = self.atoms();
        if weights.len() != atoms.len() {
            return Err(Error::NotDistribution(format!(
                "expected {} atom weights, got {}",
                atoms.len(),
                weights.len()
            )));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::NotDistribution("weights must be nonnegative".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::NotDistribution(format!("weights sum to {sum}, not 1")));
        }

        let mut pairs = Vec::new();
        for i in 0..atoms.len() {
            for j in i + 1..atoms.len() {
                let join = self.join(atoms[i], atoms[j])?;
                if join == self.top() {
                    pairs.push(PairReport {
                        x: self.label(atoms[i]).to_string(),
                        y: self.label(atoms[j]).to_string(),
                        sum_of_pair: weights[i] + weights[j],
                        join: self.label(join).to_string(),
                    });
                }
            }
        }
        // additivity would force every disjoint pair joining to I to carry weight 1
        let additive = pairs.iter().all(|p| (p.sum_of_pair - 1.0).abs() <= 1e-12);
        Ok(DisjunctionReport { pairs, additive })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub partial_order: bool,
    pub bounded: bool,
    pub is_lattice: bool,
    pub involution: bool,
    pub order_reversing: bool,
    pub contradiction: bool,
    pub excluded_middle: bool,
    pub de_morgan: bool,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.entries().iter().all(|(_, ok)| *ok)
    }

    pub fn entries(&self) -> [(&'static str, bool); 8] {
        [
            ("partial order", self.partial_order),
            ("bounded (O, I)", self.bounded),
            ("meets and joins exist", self.is_lattice),
            ("complement involution", self.involution),
            ("complement reverses order", self.order_reversing),
            ("x ∧ x' = O", self.contradiction),
            ("x ∨ x' = I", self.excluded_middle),
            ("De Morgan", self.de_morgan),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairReport {
    pub x: String,
    pub y: String,
    pub sum_of_pair: f64,
    pub join: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisjunctionReport {
    pub pairs: Vec<PairReport>,
    /// Whether the weights could be extended to an additive measure.
    pub additive: bool,
}

/// Angular tolerance for comparing lines, in degrees.
pub const LINE_TOLERANCE_DEG: f64 = 1e-9;

/// A subspace of the real plane: the origin, a line through it (angle
/// mod 180°), or the whole plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Subspace {
    Zero,
    Line(f64),
    Plane,
}

fn same_line(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(180.0);
    d.min(180.0 - d) < LINE_TOLERANCE_DEG
}

impl Subspace {
    pub fn line(angle_deg: f64) -> Self {
        Subspace::Line(angle_deg.rem_euclid(180.0))
    }

    pub fn dimension(&self) -> u8 {
        match self {
            Subspace::Zero => 0,
            Subspace::Line(_) => 1,
            Subspace::Plane => 2,
        }
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        match (self, other) {
            (Subspace::Line(a), Subspace::Line(b)) => same_line(*a, *b),
            _ => self.dimension() == other.dimension(),
        }
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        match (self, other) {
            (Subspace::Zero, _) | (_, Subspace::Zero) => Subspace::Zero,
            (Subspace::Plane, s) | (s, Subspace::Plane) => *s,
            (Subspace::Line(a), Subspace::Line(b)) => {
                if same_line(*a, *b) {
                    *self
                } else {
                    Subspace::Zero
                }
            }
        }
    }

    pub fn span(&self, other: &Subspace) -> Subspace {
        match (self, other) {
            (Subspace::Plane, _) | (_, Subspace::Plane) => Subspace::Plane,
            (Subspace::Zero, s) | (s, Subspace::Zero) => *s,
            (Subspace::Line(a), Subspace::Line(b)) => {
                if same_line(*a, *b) {
                    *self
                } else {
                    Subspace::Plane
                }
            }
        }
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        match self {
            Subspace::Zero => Subspace::Plane,
            Subspace::Plane => Subspace::Zero,
            Subspace::Line(a) => Subspace::line(a + 90.0),
        }
    }

    pub fn contained_in(&self, other: &Subspace) -> bool {
        self.intersect(other).same_as(self)
    }
}

/// Two orthogonal line pairs in the plane: `{1, 3}` along the axes and
/// `{2, 4}` rotated by `theta`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlaneSubspaceRep {
    theta: f64,
    line_angles: BTreeMap<String, f64>,
}

impl PlaneSubspaceRep {
    pub fn new(theta_deg: f64) -> crate::error::Result<Self> {
        if !(theta_deg > 0.0 && theta_deg < 90.0) {
            return Err(Error::InvalidFrame(theta_deg));
        }
        let line_angles = [
            ("1", 0.0),
            ("2", theta_deg),
            ("3", 90.0),
            ("4", theta_deg + 90.0),
        ]
        .into_iter()
        .map(|(k, v): (&str, f64)| (k.to_string(), v.rem_euclid(180.0)))
        .collect();
        Ok(Self {
            theta: theta_deg,
            line_angles,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn line_angles(&self) -> &BTreeMap<String, f64> {
        &self.line_angles
    }

    fn image(&self, lattice: &FiniteOrtholattice, e: Elem) -> Option<Subspace> {
        if e == lattice.bottom() {
            Some(Subspace::Zero)
        } else if e == lattice.top() {
            Some(Subspace::Plane)
        } else {
            self.line_angles
                .get(lattice.label(e))
                .map(|&a| Subspace::line(a))
        }
    }
}

/// True iff sending atoms to their lines, `O` to the origin and `I` to the
/// plane is an ortholattice isomorphism onto its image.
pub fn check_representation(lattice: &FiniteOrtholattice, rep: &PlaneSubspaceRep) -> bool {
    let els: Vec<Elem> = lattice.elements().collect();
    let Some(images) = els
        .iter()
        .map(|&e| rep.image(lattice, e))
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    let img = |e: Elem| images[e.0];

    for &x in &els {
        for &y in &els {
            if x != y && img(x).same_as(&img(y)) {
                return false;
            }
            if lattice.leq(x, y) != img(x).contained_in(&img(y)) {
                return false;
            }
            match (lattice.meet(x, y), lattice.join(x, y)) {
                (Ok(m), Ok(j)) => {
                    if !img(m).same_as(&img(x).intersect(&img(y)))
                        || !img(j).same_as(&img(x).span(&img(y)))
                    {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        if !img(lattice.orthocomplement(x)).same_as(&img(x).orthogonal_complement()) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wa() -> FiniteOrtholattice {
        FiniteOrtholattice::wise_alice()
    }

    fn e(l: &FiniteOrtholattice, s: &str) -> Elem {
        l.element(s).unwrap()
    }

    #[test]
    fn meets() {
        let l = wa();
        assert_eq!(l.meet(e(&l, "1"), e(&l, "2")).unwrap(), e(&l, "O"));
        assert_eq!(l.meet(e(&l, "1"), e(&l, "1")).unwrap(), e(&l, "1"));
        assert_eq!(l.meet(e(&l, "I"), e(&l, "3")).unwrap(), e(&l, "3"));
    }

    #[test]
    fn joins() {
        let l = wa();
        assert_eq!(l.join(e(&l, "1"), e(&l, "2")).unwrap(), e(&l, "I"));
        assert_eq!(l.join(e(&l, "O"), e(&l, "4")).unwrap(), e(&l, "4"));
        assert_eq!(l.join(e(&l, "3"), e(&l, "3")).unwrap(), e(&l, "3"));
    }

    #[test]
    fn complements() {
        let l = wa();
        assert_eq!(l.orthocomplement(e(&l, "1")), e(&l, "3"));
        assert_eq!(l.orthocomplement(e(&l, "O")), e(&l, "I"));
        let two = e(&l, "2");
        assert_eq!(l.orthocomplement(l.orthocomplement(two)), two);
    }

    #[test]
    fn unknown_element() {
        assert_eq!(
            wa().element("5"),
            Err(LatticeError::UnknownElement("5".into()))
        );
    }

    #[test]
    fn wise_alice_satisfies_all_laws() {
        let report = wa().laws();
        assert!(report.all_hold(), "{report:?}");
        assert_eq!(wa().atoms().len(), 4);
    }

    #[test]
    fn witness_is_two_one_three() {
        let l = wa();
        let (x, y, z) = l.find_distributivity_violation().unwrap();
        assert_eq!(
            (l.label(x), l.label(y), l.label(z)),
            ("2", "1", "3")
        );
        assert!(!l.is_distributive_at(x, y, z).unwrap());
        assert_eq!(l.meet(x, l.join(y, z).unwrap()).unwrap(), x);
    }

    fn boolean_square() -> FiniteOrtholattice {
        FiniteOrtholattice::from_covers(
            &["O", "p", "q", "I"],
            &[("O", "p"), ("O", "q"), ("p", "I"), ("q", "I")],
            &[("O", "I"), ("p", "q")],
        )
        .unwrap()
    }

    #[test]
    fn boolean_lattice_is_distributive() {
        let b = boolean_square();
        assert!(b.laws().all_hold());
        assert_eq!(b.find_distributivity_violation(), None);
    }

    #[test]
    fn bowtie_has_no_unique_join() {
        let l = FiniteOrtholattice::from_covers(
            &["O", "x", "y", "u", "v", "I"],
            &[
                ("O", "x"),
                ("O", "y"),
                ("x", "u"),
                ("x", "v"),
                ("y", "u"),
                ("y", "v"),
                ("u", "I"),
                ("v", "I"),
            ],
            &[("O", "I"), ("x", "y"), ("u", "v")],
        )
        .unwrap();
        let err = l.join(e(&l, "x"), e(&l, "y")).unwrap_err();
        assert!(matches!(err, LatticeError::NoUniqueBound { .. }));
        assert!(!l.laws().is_lattice);
    }

    #[test]
    fn malformed_orders_rejected() {
        let cyc = FiniteOrtholattice::new(
            &["O", "I"],
            &[("O", "O"), ("I", "I"), ("O", "I"), ("I", "O")],
            &[("O", "I")],
        );
        assert!(matches!(cyc, Err(LatticeError::NotPartialOrder(_))));
        let nonrefl = FiniteOrtholattice::new(&["O", "I"], &[("O", "I")], &[("O", "I")]);
        assert!(matches!(nonrefl, Err(LatticeError::NotPartialOrder(_))));
        let nocomp = FiniteOrtholattice::new(
            &["O", "I"],
            &[("O", "O"), ("I", "I"), ("O", "I")],
            &[],
        );
        assert!(matches!(nocomp, Err(LatticeError::BadComplement(_))));
    }

    #[test]
    fn uniform_disjunction_is_one_half() {
        let report = wa().disjunction_paradox(&[0.25; 4]).unwrap();
        assert_eq!(report.pairs.len(), 6);
        for p in &report.pairs {
            assert_eq!(p.sum_of_pair, 0.5);
            assert_eq!(p.join, "I");
        }
        assert!(!report.additive);
        let first = &report.pairs[0];
        assert_eq!((first.x.as_str(), first.y.as_str()), ("1", "2"));
    }

    #[test]
    fn degenerate_distribution() {
        let report = wa().disjunction_paradox(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let p13 = report
            .pairs
            .iter()
            .find(|p| p.x == "1" && p.y == "3")
            .unwrap();
        assert_eq!(p13.sum_of_pair, 1.0);
        assert_eq!(p13.join, "I");
    }

    #[test]
    fn bad_weights_rejected() {
        assert!(wa().disjunction_paradox(&[0.5, 0.5, 0.5, -0.5]).is_err());
        assert!(wa().disjunction_paradox(&[0.3; 4]).is_err());
        assert!(wa().disjunction_paradox(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn subspace_algebra() {
        let x = Subspace::line(10.0);
        let y = Subspace::line(190.0);
        assert!(x.same_as(&y));
        assert_eq!(x.intersect(&Subspace::line(20.0)), Subspace::Zero);
        assert_eq!(x.span(&Subspace::line(20.0)), Subspace::Plane);
        assert!(x.orthogonal_complement().same_as(&Subspace::line(100.0)));
        assert!(Subspace::Zero.contained_in(&x));
        assert!(!Subspace::Plane.contained_in(&x));
    }

    #[test]
    fn representation_sample_angles() {
        let l = wa();
        assert!(check_representation(&l, &PlaneSubspaceRep::new(70.0).unwrap()));
        assert!(check_representation(&l, &PlaneSubspaceRep::new(45.0).unwrap()));
    }

    #[test]
    fn representation_every_whole_degree() {
        let l = wa();
        for deg in 1..90 {
            let rep = PlaneSubspaceRep::new(f64::from(deg)).unwrap();
            assert!(check_representation(&l, &rep), "θ = {deg}°");
            let lines = rep.line_angles();
            assert!(same_line(lines["1"] + 90.0, lines["3"]));
            assert!(same_line(lines["2"] + 90.0, lines["4"]));
        }
    }

    #[test]
    fn representation_rejects_collapsed_frames() {
        assert!(matches!(PlaneSubspaceRep::new(0.0), Err(Error::InvalidFrame(_))));
        assert!(PlaneSubspaceRep::new(90.0).is_err());
        assert!(PlaneSubspaceRep::new(-10.0).is_err());
    }

    #[test]
    fn boolean_lattice_is_not_the_plane() {
        let b = boolean_square();
        let rep = PlaneSubspaceRep::new(30.0).unwrap();
        assert!(!check_representation(&b, &rep));
    }
}
