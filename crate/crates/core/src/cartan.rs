//! Finite crystallographic root systems generated from Cartan matrices.
//!
//! Conventions: `a_ij = <alpha_i^vee, alpha_j> = 2 (alpha_i|alpha_j) / (alpha_i|alpha_i)`,
//! simple roots are labelled as in Bourbaki, and the bilinear form is scaled so
//! that long roots of every irreducible component have squared length 2.
//!
//! Coroots are handled in integer coordinates over the simple coroots
//! `alpha_i^vee = 2 alpha_i / (alpha_i|alpha_i)`. Because
//! `(alpha_j | alpha_i^vee) = a_ij`, the pairing between a root-coordinate
//! vector and a coroot-coordinate vector is integral, which keeps the affine
//! machinery free of rationals.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::{RootVec, Subset, MAX_RANK};

pub type Rational = Ratio<i64>;

/// Positive or negative half of a root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn matches(&self, v: &RootVec) -> bool {
        match self {
            Sign::Plus => v.is_positive(),
            Sign::Minus => v.is_negative(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Dynkin type label such as `A2`, `C2` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = rank <= MAX_RANK
            && match family {
                Family::A => rank >= 1,
                Family::B | Family::C => rank >= 2,
                Family::D => rank >= 4,
                Family::E => (6..=8).contains(&rank),
                Family::F => rank == 4,
                Family::G => rank == 2,
            };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnknownType(format!("{:?}{}", family, rank)))
        }
    }

    /// Number of roots of the irreducible system of this type.
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }
}

/// A validated Cartan matrix of finite type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    label: String,
    rank: usize,
    matrix: [[i32; MAX_RANK]; MAX_RANK],
}

impl CartanData {
    /// The built-in Cartan matrix for a Dynkin type.
    pub fn of_type(ty: CartanType) -> Self {
        let l = ty.rank;
        let mut m = [[0i32; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(l) {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
            m[i][j] = aij;
            m[j][i] = aji;
        };
        match ty.family {
            Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_l short
                link(l - 2, l - 1, -1, -2);
            }
            Family::C => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_l long
                link(l - 2, l - 1, -2, -1);
            }
            Family::D => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 3, l - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..l - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                link(0, 1, -3, -1);
            }
        }
        CartanData {
            label: ty.to_string(),
            rank: l,
            matrix: m,
        }
    }

    /// Accepts an explicit matrix; validates the sign pattern and finite type.
    pub fn from_matrix(label: impl Into<String>, rows: &[Vec<i32>]) -> Result<Self> {
        let l = rows.len();
        if l == 0 || l > MAX_RANK {
            return Err(Error::InvalidCartan(format!(
                "rank {l} out of range 1..={MAX_RANK}"
            )));
        }
        let mut m = [[0i32; MAX_RANK]; MAX_RANK];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != l {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            m[i][..l].copy_from_slice(row);
        }
        let data = CartanData {
            label: label.into(),
            rank: l,
            matrix: m,
        };
        data.check_sign_pattern()?;
        Ok(data)
    }

    fn check_sign_pattern(&self) -> Result<()> {
        let l = self.rank;
        for i in 0..l {
            if self.matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("a_{0}{0} != 2", i + 1)));
            }
            for j in 0..l {
                if i == j {
                    continue;
                }
                let (a, b) = (self.matrix[i][j], self.matrix[j][i]);
                if a > 0 {
                    return Err(Error::InvalidCartan(format!("a_{}{} > 0", i + 1, j + 1)));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a_{}{} and a_{}{} disagree on vanishing",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        (0..self.rank)
            .map(|i| self.matrix[i][..self.rank].to_vec())
            .collect()
    }
}

/// A finite root system together with its normalized bilinear form.
///
/// Immutable after construction and shared behind an [`Arc`].
#[derive(Debug)]
pub struct RootSystem {
    cartan: CartanData,
    tag: u64,
    gram: Vec<Vec<Rational>>,
    roots: Vec<RootVec>,
    positive: Vec<RootVec>,
    root_set: HashSet<RootVec>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

/// Generates the root system of a validated Cartan matrix.
pub fn build_root_system(cartan: CartanData) -> Result<Arc<RootSystem>> {
    cartan.check_sign_pattern()?;
    let l = cartan.rank;
    let half_norms = symmetrizer(&cartan)?;
    let gram: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| half_norms[i] * Rational::from_integer(cartan.matrix[i][j] as i64))
                .collect()
        })
        .collect();
    if !is_positive_definite(&gram) {
        return Err(Error::NotFiniteType(cartan.label.clone()));
    }

    // Orbit of the simple roots under the simple reflections.
    let limit = 4 * MAX_RANK * MAX_RANK * MAX_RANK;
    let mut root_set: HashSet<RootVec> = HashSet::new();
    let mut queue: VecDeque<RootVec> = VecDeque::new();
    for i in 0..l {
        for v in [RootVec::unit(i), -RootVec::unit(i)] {
            if root_set.insert(v) {
                queue.push_back(v);
            }
        }
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..l {
            let w = reflect_with(&cartan, i, &v);
            if root_set.insert(w) {
                if root_set.len() > limit {
                    return Err(Error::NotFiniteType(cartan.label.clone()));
                }
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<RootVec> = root_set.iter().copied().collect();
    roots.sort_by_key(|r| (r.height(), *r));
    let positive: Vec<RootVec> = roots.iter().copied().filter(|r| r.is_positive()).collect();

    let mut hasher = DefaultHasher::new();
    cartan.label.hash(&mut hasher);
    cartan.matrix.hash(&mut hasher);
    let tag = hasher.finish();

    Ok(Arc::new(RootSystem {
        cartan,
        tag,
        gram,
        roots,
        positive,
        root_set,
    }))
}

/// Convenience: the root system of a Dynkin type label like `"A2"`.
pub fn root_system(label: &str) -> Result<Arc<RootSystem>> {
    build_root_system(CartanData::of_type(label.parse()?))
}

fn reflect_with(cartan: &CartanData, i: usize, v: &RootVec) -> RootVec {
    let pairing: i32 = (0..cartan.rank)
        .map(|j| v.get(j) * cartan.matrix[i][j])
        .sum();
    v.add_scaled(-pairing, &RootVec::unit(i))
}

/// Half squared lengths `d_i = (alpha_i|alpha_i)/2` with the longest simple
/// root of each connected component normalized to 1.
fn symmetrizer(cartan: &CartanData) -> Result<Vec<Rational>> {
    let l = cartan.rank;
    let mut d: Vec<Option<Rational>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..l {
                let (aij, aji) = (cartan.matrix[i][j], cartan.matrix[j][i]);
                if i == j || aij == 0 {
                    continue;
                }
                let dj = d[i].unwrap() * Rational::new(aij as i64, aji as i64);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let max = component.iter().map(|&i| d[i].unwrap()).max().unwrap();
        for &i in &component {
            d[i] = Some(d[i].unwrap() / max);
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Sylvester's criterion via fraction-exact Gaussian elimination.
fn is_positive_definite(gram: &[Vec<Rational>]) -> bool {
    let n = gram.len();
    let mut m: Vec<Vec<Rational>> = gram.to_vec();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        let pivot = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let factor = row[k] / pivot[k];
            for (x, p) in row.iter_mut().zip(&pivot).skip(k) {
                *x -= factor * p;
            }
        }
    }
    // symmetric check on the original
    (0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i]))
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn label(&self) -> &str {
        &self.cartan.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// Fingerprint identifying this system; elements of different systems never mix.
    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// All roots, ordered by `(height, coords)`.
    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn is_root(&self, v: &RootVec) -> bool {
        self.root_set.contains(v)
    }

    pub fn full_index_set(&self) -> Subset {
        Subset::full(self.rank())
    }

    /// The normalized symmetric form `(a|b)` on root coordinates.
    pub fn pairing(&self, a: &RootVec, b: &RootVec) -> Rational {
        let l = self.rank();
        let mut acc = Rational::zero();
        for i in 0..l {
            if a.get(i) == 0 {
                continue;
            }
            for j in 0..l {
                if b.get(j) != 0 {
                    acc += self.gram[i][j] * Rational::from_integer((a.get(i) * b.get(j)) as i64);
                }
            }
        }
        acc
    }

    pub fn norm2(&self, a: &RootVec) -> Rational {
        self.pairing(a, a)
    }

    /// `2a/(a|a)` in root coordinates.
    pub fn coroot(&self, a: &RootVec) -> Vec<Rational> {
        let n = self.norm2(a);
        (0..self.rank())
            .map(|i| Rational::from_integer(2 * a.get(i) as i64) / n)
            .collect()
    }

    /// `2a/(a|a)` in coordinates over the simple coroots; always integral for roots.
    pub fn coroot_coords(&self, a: &RootVec) -> RootVec {
        let n = self.norm2(a);
        let mut out = RootVec::ZERO;
        for i in 0..self.rank() {
            // alpha_i = (alpha_i|alpha_i)/2 * alpha_i^vee
            let c = Rational::from_integer(a.get(i) as i64) * self.gram[i][i] / n;
            assert!(c.is_integer(), "coroot of {a} is not in the coroot lattice");
            out.set(i, *c.numer() as i32);
        }
        out
    }

    /// `(x | y)` for `x` in root coordinates and `y` in coroot coordinates.
    #[inline]
    pub fn pair_root_coroot(&self, x: &RootVec, y: &RootVec) -> i32 {
        let l = self.rank();
        let mut acc = 0;
        for i in 0..l {
            let yi = y.get(i);
            if yi == 0 {
                continue;
            }
            for j in 0..l {
                acc += yi * self.cartan.matrix[i][j] * x.get(j);
            }
        }
        acc
    }

    /// Simple reflection `s_i` on root coordinates.
    #[inline]
    pub fn reflect(&self, i: usize, v: &RootVec) -> RootVec {
        reflect_with(&self.cartan, i, v)
    }

    /// Simple reflection `s_i` on coroot coordinates.
    #[inline]
    pub fn reflect_coroot(&self, i: usize, y: &RootVec) -> RootVec {
        let pairing: i32 = (0..self.rank())
            .map(|j| y.get(j) * self.cartan.matrix[j][i])
            .sum();
        y.add_scaled(-pairing, &RootVec::unit(i))
    }

    /// Whether `a` has maximal length within its irreducible component.
    pub fn is_long(&self, a: &RootVec) -> bool {
        let comp = self.component_of(a.support());
        self.roots
            .iter()
            .filter(|r| r.support().is_subset_of(comp))
            .all(|r| self.norm2(r) <= self.norm2(a))
    }

    fn component_of(&self, seed: Subset) -> Subset {
        let mut comp = seed;
        loop {
            let mut grown = comp;
            for i in comp.iter() {
                for j in 0..self.rank() {
                    if self.cartan.matrix[i][j] != 0 {
                        grown.insert(j);
                    }
                }
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    /// Connected components of the Dynkin diagram restricted to `j`.
    pub fn components(&self, j: Subset) -> Vec<Subset> {
        let mut remaining = j;
        let mut out = Vec::new();
        loop {
            let next = remaining.iter().next();
            let Some(start) = next else { break };
            let mut comp = Subset::from_indices([start]);
            loop {
                let mut grown = comp;
                for a in comp.iter() {
                    for b in remaining.iter() {
                        if self.cartan.matrix[a][b] != 0 {
                            grown.insert(b);
                        }
                    }
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// The subsystem generated by the simple roots indexed by `j`.
    pub fn sub_system(self: &Arc<Self>, j: Subset) -> Result<SubSystem> {
        SubSystem::new(self, j)
    }
}

#[derive(Debug)]
struct SubSystemData {
    rs: Arc<RootSystem>,
    j: Subset,
    components: Vec<Subset>,
    highest: Vec<RootVec>,
    roots: Vec<RootVec>,
    positive: Vec<RootVec>,
}

/// The parabolic subsystem spanned by the simple roots indexed by `J`, with its
/// irreducible decomposition and highest roots. Cheap to clone.
#[derive(Clone, Debug)]
pub struct SubSystem(Arc<SubSystemData>);

impl PartialEq for SubSystem {
    fn eq(&self, other: &Self) -> bool {
        self.0.j == other.0.j && self.0.rs.tag == other.0.rs.tag
    }
}

impl Eq for SubSystem {}

impl Hash for SubSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.rs.tag.hash(state);
        self.0.j.hash(state);
    }
}

impl SubSystem {
    pub fn new(rs: &Arc<RootSystem>, j: Subset) -> Result<Self> {
        let full = rs.full_index_set();
        if !j.is_subset_of(full) {
            return Err(Error::NotSubset {
                sub: j.to_string(),
                sup: full.to_string(),
            });
        }
        let components = rs.components(j);
        // Delta_J is the set of roots supported in J.
        let roots: Vec<RootVec> = rs
            .roots
            .iter()
            .copied()
            .filter(|r| r.support().is_subset_of(j))
            .collect();
        let positive: Vec<RootVec> = roots.iter().copied().filter(|r| r.is_positive()).collect();
        let highest = components
            .iter()
            .map(|c| {
                *positive
                    .iter()
                    .filter(|r| r.support().is_subset_of(*c))
                    .max_by_key(|r| (r.height(), **r))
                    .expect("nonempty component has a highest root")
            })
            .collect();
        Ok(SubSystem(Arc::new(SubSystemData {
            rs: Arc::clone(rs),
            j,
            components,
            highest,
            roots,
            positive,
        })))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.0.rs
    }

    pub fn index_set(&self) -> Subset {
        self.0.j
    }

    pub fn components(&self) -> &[Subset] {
        &self.0.components
    }

    /// Number of irreducible components.
    pub fn component_count(&self) -> usize {
        self.0.components.len()
    }

    /// Highest root of each component, in component order.
    pub fn highest_roots(&self) -> &[RootVec] {
        &self.0.highest
    }

    pub fn roots(&self) -> &[RootVec] {
        &self.0.roots
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.0.positive
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = RootVec> + '_ {
        self.0.roots.iter().copied().filter(|r| r.is_negative())
    }

    pub fn signed_roots(&self, sign: Sign) -> Vec<RootVec> {
        self.0
            .roots
            .iter()
            .copied()
            .filter(|r| sign.matches(r))
            .collect()
    }

    pub fn contains_root(&self, v: &RootVec) -> bool {
        self.0.rs.is_root(v) && v.support().is_subset_of(self.0.j)
    }

    /// Component index containing the simple root `i`, if `i` lies in `J`.
    pub fn component_of_index(&self, i: usize) -> Option<usize> {
        self.0.components.iter().position(|c| c.contains(i))
    }

    /// `{eps in Delta_J,sign : eps has a nonzero coefficient outside K}`.
    pub fn delta_j_k(&self, k: Subset, sign: Sign) -> Result<Vec<RootVec>> {
        if !k.is_subset_of(self.0.j) {
            return Err(Error::NotSubset {
                sub: k.to_string(),
                sup: self.0.j.to_string(),
            });
        }
        let outside = self.0.j.difference(k);
        Ok(self
            .0
            .roots
            .iter()
            .copied()
            .filter(|r| sign.matches(r) && !r.support().intersection(outside).is_empty())
            .collect())
    }
}

/// JSON form of a root system: rationals as `[num, den]` pairs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub roots: Vec<Vec<i32>>,
    pub gram: Vec<Vec<[i64; 2]>>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        let l = rs.rank();
        RootSystemJson {
            type_label: rs.label().to_string(),
            roots: rs.roots.iter().map(|r| r.coords(l).to_vec()).collect(),
            gram: rs
                .gram
                .iter()
                .map(|row| row.iter().map(|q| [*q.numer(), *q.denom()]).collect())
                .collect(),
        }
    }
}

/// Formats a rational as `p/q` (or `p` when integral).
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
