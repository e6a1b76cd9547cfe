//! Indecomposable root systems built from their Cartan data.
//!
//! Simple roots are indexed `1..=rank` following the Bourbaki plates (see
//! `docs/cartan.md` for the full matrices). The positive system is
//! generated from the simple roots by closing under simple reflections;
//! every root carries its coordinates in the simple-root basis, in the
//! simple-coroot basis, and in the fundamental-weight basis, so all
//! pairings are integer dot products.
//!
//! Conventions used throughout:
//! * `cartan[i][j] = ⟨α_j, α_i∨⟩` (row `i` pairs against the `i`-th coroot),
//! * a [`Weight`] is its vector of pairings with the simple coroots,
//! * `ρ` has every coordinate 1, and the Coxeter number satisfies
//!   `h − 1 = ⟨ρ, α_0∨⟩` with `α_0` the dominant short root.

use crate::{Error, Result};
use num_rational::Ratio;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// The seven families of indecomposable root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_constraint(self) -> &'static str {
        match self {
            Family::A => "rank >= 1",
            Family::B | Family::C => "rank >= 2",
            Family::D => "rank >= 4",
            Family::E => "rank in {6, 7, 8}",
            Family::F => "rank = 4",
            Family::G => "rank = 2",
        }
    }

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A validated (family, rank) pair naming one indecomposable root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.rank_is_valid(rank) {
            Ok(RootSystemType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family,
                rank,
                constraint: family.rank_constraint(),
            })
        }
    }

    /// Parse a specifier like `"A2"`, `"e6"`, `"G2"` (case-insensitive).
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::ParseSpec(spec.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::ParseSpec(spec.to_string())),
        };
        let digits = chars.as_str();
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::ParseSpec(spec.to_string()))?;
        RootSystemType::new(family, rank)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RootSystemType::parse(s)
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        RootSystemType::parse(&s).map_err(D::Error::custom)
    }
}

/// Integer weight in the fundamental-weight basis: coordinate `i` is
/// `⟨λ, α_i∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight `ϖ_i` (1-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "fundamental weight index is 1-based");
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Weight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Restricted for `p`: every coordinate in `[0, p-1]`.
    pub fn is_restricted(&self, p: i64) -> bool {
        self.coords.iter().all(|&c| (0..p).contains(&c))
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight::new(self.coords.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One root, stored in every basis the library pairs against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients of `α = Σ c_i α_i` in the simple-root basis.
    pub root_coords: Vec<i64>,
    /// Coefficients of `α∨ = Σ e_i α_i∨` in the simple-coroot basis, so
    /// `⟨λ, α∨⟩ = Σ_i λ_i e_i` for any weight λ.
    pub coroot_coords: Vec<i64>,
    /// The root expressed as a weight (pairings with the simple coroots).
    pub weight_coords: Weight,
    pub is_long: bool,
}

impl Root {
    /// `⟨ρ, α∨⟩`, the height of the coroot; lies in `[1, h-1]` for
    /// positive roots.
    pub fn coroot_height(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }

    fn root_height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

/// Classification of a prime relative to a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeClass {
    Bad,
    GoodNotVeryGood,
    VeryGood,
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeClass::Bad => write!(f, "bad"),
            PrimeClass::GoodNotVeryGood => write!(f, "good_not_very_good"),
            PrimeClass::VeryGood => write!(f, "very_good"),
        }
    }
}

/// Immutable Cartan/root/weight data for one indecomposable type.
#[derive(Debug)]
pub struct RootSystem {
    pub ty: RootSystemType,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩` (0-based storage).
    pub cartan: Vec<Vec<i64>>,
    /// All positive roots, sorted by (root height, root coordinates);
    /// the first `rank` entries are not necessarily the simple roots.
    pub positive_roots: Vec<Root>,
    /// `ρ`, the half-sum of positive roots: all coordinates 1.
    pub rho: Weight,
    pub coxeter_number: i64,
    /// `|X/ℤR|`, equal to `|det cartan|`.
    pub fundamental_group_order: i64,
    /// `J = { i : n_i = 1 }` where `α_0∨ = Σ n_i α_i∨` (1-based, sorted).
    pub j_set: Vec<usize>,
    highest_short: usize,
    highest_long: usize,
    simple_indices: Vec<usize>,
    /// Weight coordinates of each positive root -> its index.
    weight_index: HashMap<Vec<i64>, usize>,
}

static CACHE: OnceLock<Mutex<HashMap<RootSystemType, Arc<RootSystem>>>> = OnceLock::new();

impl RootSystem {
    /// Fetch (and memoize) the root system of the given type.
    pub fn get(ty: RootSystemType) -> Arc<RootSystem> {
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().expect("root system cache poisoned");
        map.entry(ty).or_insert_with(|| Arc::new(build(ty))).clone()
    }

    /// Parse a specifier such as `"B3"` and fetch the system.
    pub fn parse(spec: &str) -> Result<Arc<RootSystem>> {
        Ok(RootSystem::get(RootSystemType::parse(spec)?))
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// `dim 𝔤 = |R| + rank`, which always equals `(h+1)·rank`.
    pub fn adjoint_dimension(&self) -> i64 {
        (self.num_roots() + self.rank()) as i64
    }

    /// The dominant short root `α_0` (equals `α̃` in simply-laced types).
    pub fn highest_short_root(&self) -> &Root {
        &self.positive_roots[self.highest_short]
    }

    /// The dominant long root `α̃` (the highest root).
    pub fn highest_long_root(&self) -> &Root {
        &self.positive_roots[self.highest_long]
    }

    /// The simple root `α_i` (1-based).
    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        self.check_index(i)?;
        Ok(&self.positive_roots[self.simple_indices[i - 1]])
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        Ok(Weight::fundamental(self.rank(), i))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub(crate) fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            })
        }
    }

    /// `⟨λ, α∨⟩ = Σ_i λ_i e_i` where `e` are the coroot coordinates of `α`.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        if alpha.coroot_coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: alpha.coroot_coords.len(),
            });
        }
        Ok(pair(&lambda.coords, &alpha.coroot_coords))
    }

    /// Whether `λ = ϖ_i` for some `i ∈ J`; errors on non-dominant input.
    pub fn is_minuscule(&self, lambda: &Weight) -> Result<bool> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NonDominant(lambda.to_string()));
        }
        Ok(self
            .j_set
            .iter()
            .any(|&i| *lambda == Weight::fundamental(self.rank(), i)))
    }

    /// Bad / good-not-very-good / very-good classification of a prime.
    pub fn prime_class(&self, p: i64) -> Result<PrimeClass> {
        Ok(self.prime_class_with_rule(p)?.0)
    }

    /// Same as [`prime_class`](Self::prime_class), plus the rule that fired.
    pub fn prime_class_with_rule(&self, p: i64) -> Result<(PrimeClass, String)> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let fam = self.ty.family;
        let r = self.rank();
        let bad = match p {
            2 => fam != Family::A,
            3 => matches!(fam, Family::G | Family::F | Family::E),
            5 => fam == Family::E && r == 8,
            _ => false,
        };
        if bad {
            let rule = match p {
                2 => "p = 2 and the family is not A".to_string(),
                3 => format!("p = 3 and the family is {}", fam.letter()),
                _ => "p = 5 and the type is E8".to_string(),
            };
            return Ok((PrimeClass::Bad, rule));
        }
        if fam == Family::A && (r as i64 + 1) % p == 0 {
            return Ok((
                PrimeClass::GoodNotVeryGood,
                format!("family A{} and p divides r + 1 = {}", r, r + 1),
            ));
        }
        Ok((
            PrimeClass::VeryGood,
            "no bad-prime condition applies and p does not divide r + 1".to_string(),
        ))
    }

    /// Index of a positive root given its weight coordinates.
    pub(crate) fn positive_root_index(&self, weight_coords: &[i64]) -> Option<usize> {
        self.weight_index.get(weight_coords).copied()
    }

    /// Express a weight in the simple-root basis if it lies in `ℤR`.
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Result<Option<Vec<i64>>> {
        self.check_weight(lambda)?;
        Ok(solve_integral(&self.cartan, &lambda.coords))
    }

    /// Positive roots of the parabolic subsystem generated by
    /// `{α_i : i ∈ sub}` — the positive roots supported on `sub`.
    pub(crate) fn parabolic_positive_roots(&self, sub: &[usize]) -> Vec<usize> {
        let mut in_sub = vec![false; self.rank()];
        for &i in sub {
            in_sub[i - 1] = true;
        }
        self.positive_roots
            .iter()
            .enumerate()
            .filter(|(_, root)| {
                root.root_coords
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || in_sub[j])
            })
            .map(|(idx, _)| idx)
            .collect()
    }
}

pub(crate) fn pair(coords: &[i64], coroot: &[i64]) -> i64 {
    coords.iter().zip(coroot).map(|(a, b)| a * b).sum()
}

/// Deterministic trial division; inputs here are tiny.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Cartan matrix in the convention `a[i][j] = ⟨α_j, α_i∨⟩`, Bourbaki
/// numbering (see `docs/cartan.md`).
fn cartan_matrix(ty: RootSystemType) -> Vec<Vec<i64>> {
    let r = ty.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match ty.family {
        Family::A => {
            for i in 1..r {
                link(i, i + 1);
            }
        }
        Family::B => {
            for i in 1..r {
                link(i, i + 1);
            }
            // α_r short: ⟨α_{r-1}, α_r∨⟩ = -2.
            a[r - 1][r - 2] = -2;
        }
        Family::C => {
            for i in 1..r {
                link(i, i + 1);
            }
            // α_r long: ⟨α_r, α_{r-1}∨⟩ = -2.
            a[r - 2][r - 1] = -2;
        }
        Family::D => {
            for i in 1..r - 1 {
                link(i, i + 1);
            }
            link(r - 2, r);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if r >= 7 {
                link(6, 7);
            }
            if r == 8 {
                link(7, 8);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
            // α_1, α_2 long; α_3, α_4 short.
            a[2][1] = -2;
        }
        Family::G => {
            // α_1 short, α_2 long.
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// Relative squared lengths `(α_i, α_i) / (short, short)` of the simple
/// roots; all 1 in simply-laced types.
fn length_marks(ty: RootSystemType) -> Vec<i64> {
    let r = ty.rank;
    match ty.family {
        Family::A | Family::D | Family::E => vec![1; r],
        Family::B => {
            let mut d = vec![2; r];
            d[r - 1] = 1;
            d
        }
        Family::C => {
            let mut d = vec![1; r];
            d[r - 1] = 2;
            d
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

fn build(ty: RootSystemType) -> RootSystem {
    let rank = ty.rank;
    let cartan = cartan_matrix(ty);
    let marks = length_marks(ty);
    let simply_laced = marks.iter().all(|&d| d == 1);

    // Close the simple roots under simple reflections, tracking root-basis
    // and coroot-basis coordinates in parallel. A reflection s_i sends
    //   c ↦ c - (Σ_j c_j a[i][j]) e_i   (root side)
    //   e ↦ e - (Σ_j e_j a[j][i]) e_i   (coroot side).
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        let mut e = vec![0i64; rank];
        c[i] = 1;
        e[i] = 1;
        seen.insert(c.clone(), e.clone());
        queue.push((c, e));
    }
    while let Some((c, e)) = queue.pop() {
        for i in 0..rank {
            let root_pair: i64 = (0..rank).map(|j| c[j] * cartan[i][j]).sum();
            let coroot_pair: i64 = (0..rank).map(|j| e[j] * cartan[j][i]).sum();
            let mut c2 = c.clone();
            let mut e2 = e.clone();
            c2[i] -= root_pair;
            e2[i] -= coroot_pair;
            if !seen.contains_key(&c2) {
                seen.insert(c2.clone(), e2.clone());
                queue.push((c2, e2));
            }
        }
    }

    let mut positive: Vec<Root> = seen
        .into_iter()
        .filter(|(c, _)| c.iter().all(|&x| x >= 0))
        .map(|(c, e)| {
            let weight: Vec<i64> = (0..rank)
                .map(|i| (0..rank).map(|j| cartan[i][j] * c[j]).sum())
                .collect();
            // Squared length relative to short roots, in units where a
            // short root has value 2: c^T S c with S[i][j] = D_i a[i][j].
            let sq: i64 = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| c[i] * marks[i] * cartan[i][j] * c[j])
                        .sum::<i64>()
                })
                .sum();
            let is_long = if simply_laced { true } else { sq > 2 };
            Root {
                root_coords: c,
                coroot_coords: e,
                weight_coords: Weight::new(weight),
                is_long,
            }
        })
        .collect();
    positive
        .sort_by(|a, b| (a.root_height(), &a.root_coords).cmp(&(b.root_height(), &b.root_coords)));

    let weight_index: HashMap<Vec<i64>, usize> = positive
        .iter()
        .enumerate()
        .map(|(idx, root)| (root.weight_coords.coords.clone(), idx))
        .collect();

    let simple_indices: Vec<usize> = (0..rank)
        .map(|i| {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            positive
                .iter()
                .position(|root| root.root_coords == c)
                .expect("simple root missing from closure")
        })
        .collect();

    let dominant = |root: &Root| root.weight_coords.is_dominant();
    let highest_long = positive
        .iter()
        .position(|root| root.is_long && dominant(root))
        .expect("no dominant long root");
    let highest_short = if simply_laced {
        highest_long
    } else {
        positive
            .iter()
            .position(|root| !root.is_long && dominant(root))
            .expect("no dominant short root")
    };

    let alpha0 = &positive[highest_short];
    let coxeter_number = 1 + alpha0.coroot_height();
    let j_set: Vec<usize> = alpha0
        .coroot_coords
        .iter()
        .enumerate()
        .filter(|(_, &n)| n == 1)
        .map(|(i, _)| i + 1)
        .collect();
    let fundamental_group_order = det(&cartan).abs();

    // ⟨α, α∨⟩ = 2 for every root is the one invariant cheap enough to
    // assert at build time.
    for root in &positive {
        assert_eq!(pair(&root.weight_coords.coords, &root.coroot_coords), 2);
    }

    RootSystem {
        ty,
        cartan,
        positive_roots: positive,
        rho: Weight::new(vec![1; rank]),
        coxeter_number,
        fundamental_group_order,
        j_set,
        highest_short,
        highest_long,
        simple_indices,
        weight_index,
    }
}

/// Exact determinant by rational Gaussian elimination (matrices are tiny).
fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut d = Ratio::from_integer(1);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            a.swap(pivot, col);
            d = -d;
        }
        d *= a[col][col];
        let inv = a[col][col];
        for r in col + 1..n {
            let factor = a[r][col] / inv;
            for c in col..n {
                let sub = factor * a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    assert!(d.is_integer());
    d.to_integer()
}

/// Solve `cartan · c = target` exactly; `Some(c)` only if `c` is integral.
fn solve_integral(cartan: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = cartan.len();
    let mut a: Vec<Vec<Ratio<i64>>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut b: Vec<Ratio<i64>> = target.iter().map(|&x| Ratio::from_integer(x)).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        b.swap(pivot, col);
        let inv = a[col][col];
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col] / inv;
            for c in col..n {
                let sub = factor * a[col][c];
                a[r][c] -= sub;
            }
            let sub = factor * b[col];
            b[r] -= sub;
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = b[i] / a[i][i];
        if !x.is_integer() {
            return None;
        }
        out.push(x.to_integer());
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(spec: &str) -> Arc<RootSystem> {
        RootSystem::parse(spec).unwrap()
    }

    #[test]
    fn rank_bounds_are_enforced() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H4", "A"] {
            assert!(RootSystemType::parse(bad).is_err(), "{bad} should fail");
        }
        for good in ["a1", "b2", "D4", "e8", "f4", "g2", "A11"] {
            assert!(RootSystemType::parse(good).is_ok(), "{good} should parse");
        }
    }

    // Independent oracle for A_2: the honest e_i - e_j model in ℝ^3.
    #[test]
    fn a2_matches_hand_model() {
        let s = rs("A2");
        assert_eq!(s.coxeter_number, 3);
        assert_eq!(s.num_positive_roots(), 3);
        assert_eq!(s.fundamental_group_order, 3);
        // e1-e2, e2-e3, e1-e3: heights 1, 1, 2.
        let mut heights: Vec<i64> = s.positive_roots.iter().map(|r| r.coroot_height()).collect();
        heights.sort();
        assert_eq!(heights, vec![1, 1, 2]);
    }

    #[test]
    fn e6_table_row() {
        let s = rs("E6");
        assert_eq!(s.coxeter_number, 12);
        assert_eq!(s.j_set, vec![1, 6]);
    }

    #[test]
    fn b2_table_row() {
        let s = rs("B2");
        assert_eq!(s.coxeter_number, 4);
        assert_eq!(s.j_set, vec![2]);
    }

    #[test]
    fn pairing_examples() {
        let s = rs("A2");
        let rho = s.rho.clone();
        assert_eq!(
            s.pairing(&rho, s.highest_short_root()).unwrap(),
            s.coxeter_number - 1
        );
        assert_eq!(
            s.pairing(&Weight::zero(2), &s.positive_roots[0]).unwrap(),
            0
        );
        for ty in ["A3", "B3", "G2", "E6"] {
            let s = rs(ty);
            let w1 = s.fundamental_weight(1).unwrap();
            let a1 = s.simple_root(1).unwrap().clone();
            assert_eq!(s.pairing(&w1, &a1).unwrap(), 1);
        }
        let bad = Weight::new(vec![1, 2, 3]);
        assert!(matches!(
            rs("A2").pairing(&bad, &rs("A2").positive_roots[0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minuscule_examples() {
        let a3 = rs("A3");
        assert!(a3.is_minuscule(&Weight::fundamental(3, 2)).unwrap());
        let e8 = rs("E8");
        for i in 1..=8 {
            assert!(!e8.is_minuscule(&Weight::fundamental(8, i)).unwrap());
        }
        assert!(!a3.is_minuscule(&Weight::zero(3)).unwrap());
        assert!(matches!(
            a3.is_minuscule(&Weight::new(vec![-1, 0, 0])),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn prime_class_examples() {
        assert_eq!(rs("B2").prime_class(2).unwrap(), PrimeClass::Bad);
        assert_eq!(
            rs("A4").prime_class(5).unwrap(),
            PrimeClass::GoodNotVeryGood
        );
        assert_eq!(rs("A2").prime_class(7).unwrap(), PrimeClass::VeryGood);
        assert_eq!(rs("G2").prime_class(3).unwrap(), PrimeClass::Bad);
        assert_eq!(rs("E8").prime_class(5).unwrap(), PrimeClass::Bad);
        assert_eq!(rs("E7").prime_class(5).unwrap(), PrimeClass::VeryGood);
        assert_eq!(
            rs("A1").prime_class(2).unwrap(),
            PrimeClass::GoodNotVeryGood
        );
        assert!(matches!(rs("A2").prime_class(6), Err(Error::NotPrime(6))));
    }

    fn all_types_up_to(max_rank: usize) -> Vec<RootSystemType> {
        crate::classify::all_types(max_rank)
    }

    #[test]
    fn fundamental_group_matches_j() {
        for ty in all_types_up_to(8) {
            let s = RootSystem::get(ty);
            assert_eq!(
                s.fundamental_group_order,
                s.j_set.len() as i64 + 1,
                "type {ty}"
            );
        }
    }

    #[test]
    fn coroot_heights_fill_range() {
        for ty in all_types_up_to(8) {
            let s = RootSystem::get(ty);
            let h = s.coxeter_number;
            let heights: Vec<i64> = s.positive_roots.iter().map(|r| r.coroot_height()).collect();
            assert!(heights.iter().all(|&k| 1 <= k && k < h), "type {ty}");
            assert!(heights.contains(&1), "type {ty}");
            assert!(heights.contains(&(h - 1)), "type {ty}");
        }
    }

    #[test]
    fn root_count_and_adjoint_dimension() {
        for ty in all_types_up_to(8) {
            let s = RootSystem::get(ty);
            assert_eq!(
                s.num_roots() as i64,
                s.coxeter_number * s.rank() as i64,
                "type {ty}"
            );
            assert_eq!(
                s.adjoint_dimension(),
                (s.coxeter_number + 1) * s.rank() as i64,
                "type {ty}"
            );
        }
    }

    #[test]
    fn large_primes_are_very_good() {
        for ty in all_types_up_to(8) {
            let s = RootSystem::get(ty);
            for p in 2..=50 {
                if !is_prime(p) || p <= s.coxeter_number {
                    continue;
                }
                assert_eq!(s.prime_class(p).unwrap(), PrimeClass::VeryGood, "{ty}, {p}");
            }
        }
    }

    /// Dominance-order oracle: λ is minuscule iff it is non-zero, dominant,
    /// and no other dominant weight lies below it in dominance order.
    fn minuscule_by_dominance_order(s: &RootSystem, lambda: &Weight) -> bool {
        use std::collections::{HashSet, VecDeque};
        if lambda.is_zero() || !lambda.is_dominant() {
            return false;
        }
        // ⟨·, ρ∨⟩ decreases by exactly 1 per subtracted simple root and is
        // non-negative on dominant weights, which bounds the search. Using
        // ρ∨ = (Σ_{α>0} α∨)/2, the pairing ⟨w, ρ∨⟩ is Σ_i w_i m_i / 2 with
        // m_i the i-th coroot coordinate summed over positive roots.
        let rho_check = |w: &Weight| -> bool {
            let total: i64 = (0..s.rank())
                .map(|i| {
                    let m: i64 = s.positive_roots.iter().map(|r| r.coroot_coords[i]).sum();
                    m * w.coords[i]
                })
                .sum();
            total >= 0
        };
        let mut queue = VecDeque::new();
        let mut visited = HashSet::new();
        queue.push_back(lambda.clone());
        visited.insert(lambda.clone());
        while let Some(w) = queue.pop_front() {
            if w != *lambda && w.is_dominant() {
                return false;
            }
            for i in 1..=s.rank() {
                let alpha = s.simple_root(i).unwrap().weight_coords.clone();
                let next = w.sub(&alpha);
                if rho_check(&next) && !visited.contains(&next) {
                    visited.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        true
    }

    #[test]
    fn minuscule_agrees_with_dominance_order() {
        for ty in all_types_up_to(4) {
            let s = RootSystem::get(ty);
            let rank = s.rank();
            // All dominant weights with coordinate sum <= 3.
            let mut candidates = Vec::new();
            let mut coords = vec![0i64; rank];
            loop {
                if coords.iter().sum::<i64>() <= 3 {
                    candidates.push(Weight::new(coords.clone()));
                }
                let mut k = 0;
                loop {
                    if k == rank {
                        break;
                    }
                    coords[k] += 1;
                    if coords[k] <= 3 {
                        break;
                    }
                    coords[k] = 0;
                    k += 1;
                }
                if k == rank {
                    break;
                }
            }
            for lambda in candidates {
                assert_eq!(
                    s.is_minuscule(&lambda).unwrap(),
                    minuscule_by_dominance_order(&s, &lambda),
                    "type {ty}, weight {lambda}"
                );
            }
        }
    }

    #[test]
    fn memoization_returns_same_instance() {
        let a = RootSystem::parse("E7").unwrap();
        let b = RootSystem::parse("e7").unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn builds_are_fast() {
        // Cold builds, bypassing the cache.
        let start = std::time::Instant::now();
        for ty in all_types_up_to(8) {
            let _ = build(ty);
        }
        assert!(start.elapsed() < std::time::Duration::from_secs(1));
    }

    #[test]
    fn root_lattice_membership() {
        let s = rs("A2");
        let alpha1 = s.simple_root(1).unwrap().weight_coords.clone();
        assert_eq!(s.root_lattice_coords(&alpha1).unwrap(), Some(vec![1, 0]));
        let w1 = Weight::fundamental(2, 1);
        assert_eq!(s.root_lattice_coords(&w1).unwrap(), None);
    }
}
