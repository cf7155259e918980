//! Brute-force permutation group oracle.
//!
//! Enumerates a finite permutation group from generator permutations,
//! verifies sharp multiple transitivity, and extracts the class-theoretic
//! data every later stage consumes: conjugacy classes with cycle-type
//! labels, power maps, realness flags, point stabilizers, class fusion
//! into an overgroup, class multiplication coefficients and Sylow
//! subgroup invariants.
//!
//! At the orders involved (at most 95040) full enumeration keeps every
//! lookup O(1); element sets are held in lexicographic order so all
//! derived data is deterministic.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::PermError;

/// A permutation of the points 1..=degree, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut v = vec![0u8; degree];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > degree {
                return Err(PermError::PointOutOfRange {
                    point: img,
                    degree,
                });
            }
            if seen[img - 1] {
                return Err(PermError::RepeatedPoint(img));
            }
            seen[img - 1] = true;
            v[i] = (img - 1) as u8;
        }
        Ok(Perm { images: v })
    }

    /// Parses disjoint cycle notation, e.g. `(1,2,3)(4,5)`; `()` is the
    /// identity. Points not mentioned are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree];
        let bytes = s.as_bytes();
        let mut i = 0;
        if s.is_empty() {
            return Err(PermError::Parse("empty string".into()));
        }
        while i < bytes.len() {
            if bytes[i] != b'(' {
                return Err(PermError::Parse(format!("expected `(` in `{text}`")));
            }
            i += 1;
            let mut cycle: Vec<usize> = Vec::new();
            while i < bytes.len() && bytes[i] != b')' {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == start {
                    return Err(PermError::Parse(format!("expected point in `{text}`")));
                }
                let p: usize = s[start..i]
                    .parse()
                    .map_err(|_| PermError::Parse(format!("bad point in `{text}`")))?;
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                used[p - 1] = true;
                cycle.push(p);
                if i < bytes.len() && bytes[i] == b',' {
                    i += 1;
                }
            }
            if i >= bytes.len() {
                return Err(PermError::Parse(format!("unclosed cycle in `{text}`")));
            }
            i += 1; // consume ')'
            for w in 0..cycle.len() {
                images[cycle[w] - 1] = cycle[(w + 1) % cycle.len()];
            }
        }
        Perm::from_images_one_based(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// Composition left to right: `(a.then(b))(x) = b(a(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            v[img as usize] = i as u8;
        }
        Perm { images: v }
    }

    /// Conjugate `self` by `g` (the class-invariant operation).
    pub fn conjugated_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = acc.then(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u8 == j)
            .count()
    }

    pub fn is_even(&self) -> bool {
        let transpositions: u32 = self.cycle_type().iter().map(|l| l - 1).sum();
        transpositions.is_multiple_of(2)
    }

    fn key(&self) -> &[u8] {
        &self.images
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                if !first {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
                seen[p] = true;
                p = self.images[p] as usize;
                first = false;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle-type label in the style of the reference tables: nontrivial parts
/// in increasing order with multiplicities, fixed points omitted except for
/// the identity, e.g. `2^18^1` or `1^12`.
pub fn cycle_type_label(cycle_type: &[u32], degree: usize) -> String {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &l in cycle_type {
        if l > 1 {
            *counts.entry(l).or_insert(0) += 1;
        }
    }
    if counts.is_empty() {
        return format!("1^{degree}");
    }
    counts
        .iter()
        .map(|(l, m)| format!("{l}^{m}"))
        .collect::<Vec<_>>()
        .join("")
}

/// One conjugacy class of an enumerated group.
#[derive(Clone, Debug)]
pub struct ClassData {
    /// Cycle-type label with an `_A`/`_B`/`_C` suffix when several classes
    /// share a type.
    pub label: String,
    pub rep: Perm,
    pub size: u64,
    pub element_order: u64,
    pub cycle_type: Vec<u32>,
    pub inverse_class: usize,
    pub real: bool,
    /// Indices into the group's element list.
    pub members: Vec<u32>,
}

impl ClassData {
    pub fn moved_points(&self) -> usize {
        self.cycle_type.iter().filter(|&&l| l > 1).map(|&l| l as usize).sum()
    }
}

/// A fully enumerated permutation group with its conjugacy class structure.
pub struct GroupData {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Vec<u8>, u32>,
    classes: Vec<ClassData>,
    class_of: Vec<u32>,
}

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

impl GroupData {
    /// Breadth-first closure of the generators under multiplication.
    pub fn closure(generators: &[Perm], cap: usize) -> Result<Self, PermError> {
        if generators.is_empty() {
            return Err(PermError::MixedDegrees);
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(PermError::MixedDegrees);
        }
        let mut set: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![Perm::identity(degree)];
        set.insert(frontier[0].clone());
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = x.then(g);
                if set.insert(y.clone()) {
                    if set.len() > cap {
                        return Err(PermError::CapExceeded(cap));
                    }
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Perm> = set.into_iter().collect();
        elements.sort_unstable();
        Ok(GroupData::from_sorted_elements(
            degree,
            generators.to_vec(),
            elements,
        ))
    }

    fn from_sorted_elements(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        let index: HashMap<Vec<u8>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.key().to_vec(), i as u32))
            .collect();
        let (classes, class_of) = compute_classes(&elements, &index, &generators, degree);
        GroupData {
            degree,
            generators,
            elements,
            index,
            classes,
            class_of,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.index.contains_key(p.key())
    }

    pub fn element_index(&self, p: &Perm) -> Option<u32> {
        self.index.get(p.key()).copied()
    }

    /// Class index of an element of the group.
    pub fn class_of(&self, p: &Perm) -> Result<usize, PermError> {
        self.element_index(p)
            .map(|i| self.class_of[i as usize] as usize)
            .ok_or(PermError::NotInGroup)
    }

    pub fn class_index_of_element_index(&self, i: u32) -> usize {
        self.class_of[i as usize] as usize
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.order() / self.classes[class].size
    }

    /// Class of `rep^k` for the representative of a class.
    pub fn power_class(&self, class: usize, k: u64) -> usize {
        let rep = &self.classes[class].rep;
        self.class_of(&rep.pow(k)).expect("closed under powers")
    }

    pub fn exponent(&self) -> u64 {
        self.classes
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&c.element_order))
    }

    /// Sharp k-transitivity verification: order, transitivity on ordered
    /// k-tuples, trivial pointwise stabilizer, and evenness of generators.
    pub fn verify_sharp_transitivity(&self, k: usize) -> TransitivityReport {
        let n = self.degree;
        let expected: u64 = (0..k).map(|i| (n - i) as u64).product();
        let mut report = TransitivityReport {
            k,
            expected_order: expected,
            order: self.order(),
            tuple_orbit_size: 0,
            stabilizer_order: 0,
            generators_even: self.generators.iter().all(Perm::is_even),
            ok: false,
            reason: None,
        };
        if report.order != expected {
            report.reason = Some(format!(
                "order {} differs from {}",
                report.order, expected
            ));
            return report;
        }
        // Orbit of the tuple (1, ..., k) under the generators.
        let start: Vec<usize> = (1..=k).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        while let Some(t) = frontier.pop() {
            for g in &self.generators {
                let img: Vec<usize> = t.iter().map(|&p| g.apply(p)).collect();
                if seen.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        report.tuple_orbit_size = seen.len() as u64;
        if report.tuple_orbit_size != expected {
            report.reason = Some(format!(
                "orbit on {k}-tuples has size {}, expected {}",
                report.tuple_orbit_size, expected
            ));
            return report;
        }
        let fixes: Vec<usize> = (1..=k).collect();
        report.stabilizer_order = self
            .elements
            .iter()
            .filter(|e| fixes.iter().all(|&p| e.apply(p) == p))
            .count() as u64;
        if report.stabilizer_order != 1 {
            report.reason = Some(format!(
                "pointwise stabilizer of {k} points has order {}",
                report.stabilizer_order
            ));
            return report;
        }
        if !report.generators_even {
            report.reason = Some("a generator is an odd permutation".into());
            return report;
        }
        report.ok = true;
        report
    }

    /// Pointwise stabilizer of the given 1-based points, as an enumerated
    /// subgroup on the same point set.
    pub fn stabilizer(&self, points: &[usize]) -> Result<GroupData, PermError> {
        for &p in points {
            if p == 0 || p > self.degree {
                return Err(PermError::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        let elements: Vec<Perm> = self
            .elements
            .iter()
            .filter(|e| points.iter().all(|&p| e.apply(p) == p))
            .cloned()
            .collect();
        let generators = generating_subset(&elements, self.degree);
        Ok(GroupData::from_sorted_elements(
            self.degree,
            generators,
            elements,
        ))
    }

    /// Drops points that every element fixes and relabels the remaining
    /// points 1..m in increasing order.
    pub fn restricted_dropping(&self, dropped: &[usize]) -> Result<GroupData, PermError> {
        for &p in dropped {
            if self.elements.iter().any(|e| e.apply(p) != p) {
                return Err(PermError::Fixture(format!(
                    "point {p} is not fixed by the whole group"
                )));
            }
        }
        let kept: Vec<usize> = (1..=self.degree)
            .filter(|p| !dropped.contains(p))
            .collect();
        let new_label: HashMap<usize, usize> = kept
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i + 1))
            .collect();
        let map_perm = |perm: &Perm| -> Perm {
            let images: Vec<usize> = kept.iter().map(|&p| new_label[&perm.apply(p)]).collect();
            Perm::from_images_one_based(&images).expect("bijective restriction")
        };
        let mut elements: Vec<Perm> = self.elements.iter().map(map_perm).collect();
        elements.sort_unstable();
        let generators: Vec<Perm> = self.generators.iter().map(map_perm).collect();
        Ok(GroupData::from_sorted_elements(
            kept.len(),
            generators,
            elements,
        ))
    }

    /// Maps each class of the subgroup `h` (acting on fewer points, padded
    /// with fixed points) to the class of `self` containing it.
    pub fn fusion_from(&self, h: &GroupData) -> Result<Vec<usize>, PermError> {
        if h.degree > self.degree {
            return Err(PermError::MixedDegrees);
        }
        h.classes
            .iter()
            .map(|c| self.class_of(&pad_perm(&c.rep, self.degree)))
            .collect()
    }

    /// Exhaustively checks that the fusion map is well defined: every
    /// member of every `h`-class lands in the same class of `self`.
    pub fn fusion_well_defined(&self, h: &GroupData) -> Result<bool, PermError> {
        let fusion = self.fusion_from(h)?;
        for (ci, c) in h.classes.iter().enumerate() {
            for &m in &c.members {
                let padded = pad_perm(&h.elements[m as usize], self.degree);
                if self.class_of(&padded)? != fusion[ci] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Class multiplication coefficient: the number of pairs (x, y) with
    /// x in class j, y in class k and xy equal to the fixed representative
    /// of class l.
    pub fn class_mult_coeff(&self, j: usize, k: usize, l: usize) -> u64 {
        let rep_l = &self.classes[l].rep;
        let mut count = 0;
        for &xi in &self.classes[j].members {
            let x = &self.elements[xi as usize];
            let y = x.inverse().then(rep_l);
            if let Some(yi) = self.element_index(&y) {
                if self.class_of[yi as usize] as usize == k {
                    count += 1;
                }
            }
        }
        count
    }

    /// Builds one Sylow p-subgroup deterministically and reports invariants.
    ///
    /// The subgroup is grown by normalizer steps: starting from a p-element
    /// (the `seed`-th in element order), the current p-subgroup is extended
    /// by a p-element of its normalizer until the full p-part of the group
    /// order is reached. The seed only selects the starting element;
    /// identical seeds give identical reports.
    pub fn sylow_probe(&self, p: u64, seed: u64) -> Result<SylowReport, PermError> {
        if !self.order().is_multiple_of(p) {
            return Err(PermError::PrimeDoesNotDivide(p));
        }
        let mut target = 1u64;
        let mut m = self.order();
        while m.is_multiple_of(p) {
            target *= p;
            m /= p;
        }
        let p_elements: Vec<&Perm> = self
            .elements
            .iter()
            .filter(|e| {
                let o = e.order();
                o > 1 && is_power_of(o, p)
            })
            .collect();
        let start = p_elements[(seed % p_elements.len() as u64) as usize].clone();
        let mut sub = GroupData::closure(&[start], target as usize)?;
        while sub.order() < target {
            let sub_set: HashSet<&[u8]> = sub.elements.iter().map(Perm::key).collect();
            let mut extended = false;
            for g in &self.elements {
                // g normalizes sub iff it conjugates every generator into sub
                if !sub
                    .generators
                    .iter()
                    .all(|s| sub_set.contains(s.conjugated_by(g).key()))
                {
                    continue;
                }
                if sub_set.contains(g.key()) {
                    continue;
                }
                let o = g.order();
                if o > 1 && is_power_of(o, p) {
                    let mut gens = sub.generators.clone();
                    gens.push(g.clone());
                    let bigger = GroupData::closure(&gens, target as usize)?;
                    if is_power_of(bigger.order(), p) && bigger.order() > sub.order() {
                        sub = bigger;
                        extended = true;
                        break;
                    }
                }
            }
            if !extended {
                return Err(PermError::Fixture(format!(
                    "sylow {p}-subgroup search stalled at order {}",
                    sub.order()
                )));
            }
        }
        let mut census: BTreeMap<u64, u64> = BTreeMap::new();
        for e in sub.elements() {
            *census.entry(e.order()).or_insert(0) += 1;
        }
        let exponent = census.keys().fold(1u64, |acc, &o| acc.lcm(&o));
        let abelian = sub.elements().iter().all(|a| {
            sub.generators()
                .iter()
                .all(|b| a.then(b) == b.then(a))
        });
        let orbit_sizes = orbit_sizes(&sub);
        Ok(SylowReport {
            prime: p,
            order: sub.order(),
            abelian,
            exponent,
            element_order_census: census,
            orbit_sizes,
        })
    }

    /// Serializable class report in canonical class order.
    pub fn class_report(&self) -> Vec<ClassReportEntry> {
        let primes: Vec<u64> = {
            let mut ps = Vec::new();
            let mut m = self.order();
            let mut p = 2;
            while p * p <= m {
                if m.is_multiple_of(p) {
                    ps.push(p);
                    while m.is_multiple_of(p) {
                        m /= p;
                    }
                }
                p += 1;
            }
            if m > 1 {
                ps.push(m);
            }
            ps
        };
        self.classes
            .iter()
            .enumerate()
            .map(|(ci, c)| ClassReportEntry {
                label: c.label.clone(),
                size: c.size,
                order_of_element: c.element_order,
                power_map: primes
                    .iter()
                    .map(|&p| (p.to_string(), self.classes[self.power_class(ci, p)].label.clone()))
                    .collect(),
                inverse_class: self.classes[c.inverse_class].label.clone(),
                real: c.real,
            })
            .collect()
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn orbit_sizes(g: &GroupData) -> Vec<u64> {
    let n = g.degree();
    let mut seen = vec![false; n + 1];
    let mut sizes = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            for gen in g.generators() {
                let img = gen.apply(orbit[i]);
                if !seen[img] {
                    seen[img] = true;
                    orbit.push(img);
                }
            }
            i += 1;
        }
        sizes.push(orbit.len() as u64);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn pad_perm(p: &Perm, degree: usize) -> Perm {
    let mut images: Vec<usize> = (1..=degree).collect();
    for point in 1..=p.degree() {
        images[point - 1] = p.apply(point);
    }
    Perm::from_images_one_based(&images).expect("padding preserves bijectivity")
}

/// Greedy small generating set for a subgroup given as a sorted element set.
fn generating_subset(elements: &[Perm], degree: usize) -> Vec<Perm> {
    let total = elements.len();
    let mut gens: Vec<Perm> = Vec::new();
    let mut known: HashSet<Perm> = HashSet::new();
    known.insert(Perm::identity(degree));
    for e in elements {
        if known.contains(e) {
            continue;
        }
        gens.push(e.clone());
        // regrow closure
        known.clear();
        let mut frontier = vec![Perm::identity(degree)];
        known.insert(frontier[0].clone());
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.then(g);
                if known.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        if known.len() == total {
            break;
        }
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree));
    }
    gens
}

fn compute_classes(
    elements: &[Perm],
    index: &HashMap<Vec<u8>, u32>,
    generators: &[Perm],
    degree: usize,
) -> (Vec<ClassData>, Vec<u32>) {
    let n = elements.len();
    let mut class_of = vec![u32::MAX; n];
    let mut raw: Vec<Vec<u32>> = Vec::new();
    for i in 0..n {
        if class_of[i] != u32::MAX {
            continue;
        }
        let cid = raw.len() as u32;
        let mut members = vec![i as u32];
        class_of[i] = cid;
        let mut frontier = vec![i as u32];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = elements[x as usize].conjugated_by(g);
                let yi = index[y.key()];
                if class_of[yi as usize] == u32::MAX {
                    class_of[yi as usize] = cid;
                    members.push(yi);
                    frontier.push(yi);
                }
            }
        }
        members.sort_unstable();
        raw.push(members);
    }
    // Assemble class data with a canonical order: element order, moved
    // points, cycle type, size, then representative.
    let mut order_keys: Vec<(u64, usize, Vec<u32>, u64, u32, usize)> = raw
        .iter()
        .enumerate()
        .map(|(ci, members)| {
            let rep = &elements[members[0] as usize];
            let ct = rep.cycle_type();
            let moved: usize = ct.iter().filter(|&&l| l > 1).map(|&l| l as usize).sum();
            (
                rep.order(),
                moved,
                {
                    let mut asc = ct.clone();
                    asc.sort_unstable();
                    asc
                },
                members.len() as u64,
                members[0],
                ci,
            )
        })
        .collect();
    order_keys.sort();
    let new_of_old: HashMap<usize, usize> = order_keys
        .iter()
        .enumerate()
        .map(|(new, key)| (key.5, new))
        .collect();
    let mut classes: Vec<ClassData> = Vec::with_capacity(raw.len());
    for key in &order_keys {
        let members = raw[key.5].clone();
        let rep = elements[members[0] as usize].clone();
        let cycle_type = rep.cycle_type();
        classes.push(ClassData {
            label: String::new(),
            size: members.len() as u64,
            element_order: rep.order(),
            cycle_type,
            inverse_class: usize::MAX,
            real: false,
            rep,
            members,
        });
    }
    let mut final_class_of = vec![0u32; n];
    for (i, c) in class_of.iter().enumerate() {
        final_class_of[i] = new_of_old[&(*c as usize)] as u32;
    }
    // Inverse classes and realness.
    for ci in 0..classes.len() {
        let inv = classes[ci].rep.inverse();
        let ii = final_class_of[index[inv.key()] as usize] as usize;
        classes[ci].inverse_class = ii;
        classes[ci].real = ii == ci;
    }
    // Labels with subscripts for repeated cycle types.
    let mut by_label: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (ci, c) in classes.iter().enumerate() {
        by_label
            .entry(cycle_type_label(&c.cycle_type, degree))
            .or_default()
            .push(ci);
    }
    for (base, members) in by_label {
        if members.len() == 1 {
            classes[members[0]].label = base;
        } else {
            for (i, &ci) in members.iter().enumerate() {
                let suffix = (b'A' + i as u8) as char;
                classes[ci].label = format!("{base}_{suffix}");
            }
        }
    }
    (classes, final_class_of)
}

#[derive(Clone, Debug)]
pub struct TransitivityReport {
    pub k: usize,
    pub expected_order: u64,
    pub order: u64,
    pub tuple_orbit_size: u64,
    pub stabilizer_order: u64,
    pub generators_even: bool,
    pub ok: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SylowReport {
    pub prime: u64,
    pub order: u64,
    pub abelian: bool,
    pub exponent: u64,
    pub element_order_census: BTreeMap<u64, u64>,
    pub orbit_sizes: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReportEntry {
    pub label: String,
    pub size: u64,
    pub order_of_element: u64,
    pub power_map: BTreeMap<String, String>,
    pub inverse_class: String,
    pub real: bool,
}

/// Parses a generator fixture: `degree: n` on the first line, then one
/// generator per line in disjoint cycle notation. `#` starts a comment.
pub fn parse_fixture(text: &str) -> Result<(usize, Vec<Perm>), PermError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree:") {
            degree = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| PermError::Fixture(format!("bad degree line `{line}`")))?,
            );
            continue;
        }
        let d = degree.ok_or_else(|| {
            PermError::Fixture("generator listed before the degree line".into())
        })?;
        gens.push(Perm::parse(line, d)?);
    }
    let d = degree.ok_or_else(|| PermError::Fixture("missing degree line".into()))?;
    if gens.is_empty() {
        return Err(PermError::Fixture("no generators".into()));
    }
    Ok((d, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn g9_generators() -> Vec<Perm> {
        [
            "(1,2,3)(4,5,6)(7,8,9)",
            "(1,4,7)(2,5,8)(3,6,9)",
            "(2,4,3,7)(5,6,9,8)",
            "(2,5,3,9)(4,8,7,6)",
        ]
        .iter()
        .map(|s| Perm::parse(s, 9).unwrap())
        .collect()
    }

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("(1,2,3)(4,5)", 9).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(3), 1);
        assert_eq!(p.apply(5), 4);
        assert_eq!(p.apply(7), 7);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        let id = Perm::parse("()", 12).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Perm::parse("(1,1,2)", 9),
            Err(PermError::RepeatedPoint(1))
        ));
        assert!(matches!(
            Perm::parse("(1,10)", 9),
            Err(PermError::PointOutOfRange { .. })
        ));
        assert!(Perm::parse("(1,2", 9).is_err());
        assert!(Perm::parse("1,2)", 9).is_err());
    }

    #[test]
    fn cycle_types_and_orders() {
        let p = Perm::parse("(1,2)(3,4,5,6,7,8,9,10)", 10).unwrap();
        assert_eq!(p.cycle_type(), vec![8, 2]);
        assert_eq!(p.order(), 8);
        assert_eq!(cycle_type_label(&p.cycle_type(), 10), "2^18^1");
        assert_eq!(cycle_type_label(&[1, 1, 1, 1, 1, 1, 1, 1, 1], 9), "1^9");
    }

    #[test]
    fn cyclic_group_of_order_twelve() {
        let c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12).unwrap();
        let g = GroupData::closure(&[c], 100).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.verify_sharp_transitivity(2).ok);
    }

    #[test]
    fn affine_group_on_nine_points() {
        let g = GroupData::closure(&g9_generators(), 1000).unwrap();
        assert_eq!(g.order(), 72);
        let rep = g.verify_sharp_transitivity(2);
        assert!(rep.ok, "{:?}", rep.reason);
        let sizes: Vec<u64> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 9, 8, 18, 18, 18]);
        let four_squares = g
            .classes()
            .iter()
            .filter(|c| c.cycle_type == vec![4, 4, 1])
            .count();
        assert_eq!(four_squares, 3);
        assert!(g.classes().iter().all(|c| c.real));
        // Sum of class sizes is the order.
        assert_eq!(g.classes().iter().map(|c| c.size).sum::<u64>(), 72);
    }

    #[test]
    fn stabilizer_of_two_points_in_g9_is_trivial() {
        let g = GroupData::closure(&g9_generators(), 1000).unwrap();
        let s = g.stabilizer(&[1, 2]).unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn class_mult_coeff_identity_cases() {
        let g = GroupData::closure(&g9_generators(), 1000).unwrap();
        // j = identity class: coefficient is 1 iff k = l.
        for k in 0..g.classes().len() {
            for l in 0..g.classes().len() {
                let expected = if k == l { 1 } else { 0 };
                assert_eq!(g.class_mult_coeff(0, k, l), expected);
            }
        }
        // Nine involutions pair with themselves to reach the identity.
        let invol = g
            .classes()
            .iter()
            .position(|c| c.element_order == 2)
            .unwrap();
        assert_eq!(g.class_mult_coeff(invol, invol, 0), 9);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12)", 12).unwrap();
        assert!(matches!(
            GroupData::closure(&[c], 5),
            Err(PermError::CapExceeded(5))
        ));
    }

    #[test]
    fn fixture_parsing() {
        let text = "# comment\ndegree: 9\n(1,2,3)(4,5,6)(7,8,9)\n(2,4,3,7)(5,6,9,8)\n";
        let (d, gens) = parse_fixture(text).unwrap();
        assert_eq!(d, 9);
        assert_eq!(gens.len(), 2);
        assert!(parse_fixture("degree: x\n").is_err());
        assert!(parse_fixture("(1,2)\ndegree: 5\n").is_err());
    }

    #[test]
    fn sylow_probe_of_g9() {
        let g = GroupData::closure(&g9_generators(), 1000).unwrap();
        let s2 = g.sylow_probe(2, 0).unwrap();
        assert_eq!(s2.order, 8);
        // Quaternion group: one involution, six elements of order 4.
        assert_eq!(s2.element_order_census.get(&2), Some(&1));
        assert_eq!(s2.element_order_census.get(&4), Some(&6));
        assert!(!s2.abelian);
        let s3 = g.sylow_probe(3, 0).unwrap();
        assert_eq!(s3.order, 9);
        assert!(s3.abelian);
        assert!(g.sylow_probe(5, 0).is_err());
    }
}
