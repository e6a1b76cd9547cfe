//! The finite Weyl group as integer lattice automorphisms.
//!
//! Elements are rank×rank integer matrices acting on fundamental-weight
//! coordinates; equality is always matrix equality. Words of simple
//! reflections are kept alongside when they come for free. Nothing here
//! enumerates the group: lengths are inversion counts over the positive
//! roots, and longest elements come from a greedy descent that terminates
//! after exactly `|R_sub^+|` steps.

use crate::rootsys::{pair, Root, RootSystem, Weight};
use crate::{Error, Result};
use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

/// A Weyl group element: an integer matrix on weight coordinates, with an
/// optional word in the simple reflections.
///
/// The word `[j_1, ..., j_m]` denotes `s_{j_1} ∘ s_{j_2} ∘ ... ∘ s_{j_m}`
/// (rightmost letter applied first).
#[derive(Debug, Clone, Serialize)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}
impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let matrix = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylElement {
            matrix,
            word: Some(Vec::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| pair(row, &lambda.coords))
                .collect(),
        )
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut matrix = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    matrix[i][j] += a * other.matrix[k][j];
                }
            }
        }
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement { matrix, word }
    }

    /// Exact inverse (Weyl matrices are unimodular).
    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut a: Vec<Vec<Ratio<i64>>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
            .collect();
        let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Ratio::from_integer(i64::from(i == j)))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("singular Weyl matrix");
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col];
            for c in 0..n {
                a[col][c] /= p;
                inv[col][c] /= p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col];
                for c in 0..n {
                    let (ac, ic) = (a[col][c], inv[col][c]);
                    a[r][c] -= f * ac;
                    inv[r][c] -= f * ic;
                }
            }
        }
        let matrix = inv
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        assert!(x.is_integer(), "Weyl inverse must be integral");
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();
        let word = self
            .word
            .as_ref()
            .map(|w| w.iter().rev().copied().collect());
        WeylElement { matrix, word }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) if w.is_empty() => write!(f, "e"),
            Some(w) => {
                let parts: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
                write!(f, "{}", parts.join(" "))
            }
            None => write!(f, "<matrix>"),
        }
    }
}

impl RootSystem {
    /// The simple reflection `s_i(λ) = λ - ⟨λ, α_i∨⟩ α_i` (1-based index).
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let n = self.rank();
        let mut matrix = WeylElement::identity(n).matrix;
        for (k, row) in matrix.iter_mut().enumerate() {
            row[i - 1] -= self.cartan[k][i - 1];
        }
        Ok(WeylElement {
            matrix,
            word: Some(vec![i]),
        })
    }

    /// The reflection in an arbitrary root.
    pub(crate) fn root_reflection(&self, alpha: &Root) -> WeylElement {
        let n = self.rank();
        let mut matrix = WeylElement::identity(n).matrix;
        for (k, row) in matrix.iter_mut().enumerate() {
            for j in 0..n {
                row[j] -= alpha.weight_coords.coords[k] * alpha.coroot_coords[j];
            }
        }
        WeylElement { matrix, word: None }
    }

    /// Coxeter length: the number of positive roots sent negative.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|alpha| {
                let image = w.apply(&alpha.weight_coords);
                let neg: Vec<i64> = image.coords.iter().map(|c| -c).collect();
                self.positive_root_index(&neg).is_some()
            })
            .count()
    }

    /// Longest element of the parabolic subgroup generated by
    /// `{s_i : i ∈ sub}`; `sub = I` gives `w_0`. Comes with a reduced word.
    pub fn longest_element(&self, sub: &[usize]) -> Result<WeylElement> {
        for &i in sub {
            self.check_index(i)?;
        }
        // Greedy descent of a parabolic-regular dominant vector; each step
        // raises the inversion count by 1, so the word is reduced.
        let mut v = Weight::zero(self.rank());
        for &i in sub {
            v.coords[i - 1] = 1;
        }
        let mut w = WeylElement::identity(self.rank());
        loop {
            let next = sub.iter().copied().find(|&i| v.coords[i - 1] > 0);
            match next {
                None => return Ok(w),
                Some(i) => {
                    let s = self.simple_reflection(i)?;
                    v = s.apply(&v);
                    w = s.compose(&w);
                }
            }
        }
    }

    /// `ℓ(w_0 w_i) = |R^+| - |R_i^+|` for a minuscule index `i ∈ J`.
    pub fn l_w0wi(&self, i: usize) -> Result<usize> {
        if !self.j_set.contains(&i) {
            return Err(Error::NotMinusculeIndex(i));
        }
        let all: Vec<usize> = (1..=self.rank()).collect();
        let without: Vec<usize> = all.iter().copied().filter(|&k| k != i).collect();
        let w0 = self.longest_element(&all)?;
        let wi = self.longest_element(&without)?;
        let product = w0.compose(&wi);
        let len = self.length(&product);
        debug_assert_eq!(
            len,
            self.num_positive_roots() - self.parabolic_positive_roots(&without).len()
        );
        Ok(len)
    }

    /// Greedy dominant representative: returns `(μ, w)` with `w(λ) = μ`
    /// dominant, `w` given by a word of simple reflections.
    pub fn make_dominant(&self, lambda: &Weight) -> Result<(Weight, WeylElement)> {
        self.check_weight(lambda)?;
        let mut v = lambda.clone();
        let mut w = WeylElement::identity(self.rank());
        loop {
            let next = (1..=self.rank()).find(|&i| v.coords[i - 1] < 0);
            match next {
                None => return Ok((v, w)),
                Some(i) => {
                    let s = self.simple_reflection(i)?;
                    v = s.apply(&v);
                    w = s.compose(&w);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystemType;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::collections::HashSet;
    use std::sync::Arc;

    fn rs(spec: &str) -> Arc<RootSystem> {
        RootSystem::parse(spec).unwrap()
    }

    #[test]
    fn rank_one_reflection_negates() {
        let s = rs("A1");
        let s1 = s.simple_reflection(1).unwrap();
        assert_eq!(s1.apply(&Weight::new(vec![1])), Weight::new(vec![-1]));
    }

    #[test]
    fn a2_reflection_moves_alpha2() {
        let s = rs("A2");
        let s1 = s.simple_reflection(1).unwrap();
        let alpha2 = s.simple_root(2).unwrap().weight_coords.clone();
        // s_1(α_2) = α_1 + α_2.
        let expected = s
            .positive_roots
            .iter()
            .find(|r| r.root_coords == vec![1, 1])
            .unwrap()
            .weight_coords
            .clone();
        assert_eq!(s1.apply(&alpha2), expected);
    }

    #[test]
    fn simple_reflections_are_involutions() {
        for ty in ["A3", "B2", "C3", "D4", "F4", "G2"] {
            let s = rs(ty);
            for i in 1..=s.rank() {
                let si = s.simple_reflection(i).unwrap();
                assert!(si.compose(&si).is_identity(), "{ty}, s{i}");
            }
        }
        assert!(matches!(
            rs("A2").simple_reflection(3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            rs("A2").simple_reflection(0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn length_of_identity_and_w0() {
        let s = rs("A3");
        assert_eq!(s.length(&WeylElement::identity(3)), 0);
        let w0 = s.longest_element(&[1, 2, 3]).unwrap();
        assert_eq!(s.length(&w0), s.num_positive_roots());
        assert_eq!(s.num_positive_roots(), 6);
        assert_eq!(w0.word.as_ref().unwrap().len(), 6);
    }

    /// Brute-force enumeration oracle (rank <= 3 only): generate the whole
    /// group by closing under simple reflections and check that our length
    /// function matches the word metric.
    fn enumerate_group(s: &RootSystem) -> Vec<(WeylElement, usize)> {
        let mut frontier = vec![WeylElement::identity(s.rank())];
        let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::new();
        seen.insert(frontier[0].matrix.clone());
        let mut out = vec![(frontier[0].clone(), 0usize)];
        let mut dist = 0usize;
        while !frontier.is_empty() {
            dist += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for i in 1..=s.rank() {
                    let v = s.simple_reflection(i).unwrap().compose(w);
                    if seen.insert(v.matrix.clone()) {
                        out.push((v.clone(), dist));
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        out
    }

    #[test]
    fn length_matches_word_metric_small_rank() {
        for ty in ["A1", "A2", "A3", "B2", "C3", "G2"] {
            let s = rs(ty);
            for (w, dist) in enumerate_group(&s) {
                assert_eq!(s.length(&w), dist, "{ty}");
            }
        }
    }

    #[test]
    fn longest_element_examples() {
        let s = rs("B2");
        assert!(s.longest_element(&[]).unwrap().is_identity());
        let w0 = s.longest_element(&[1, 2]).unwrap();
        assert_eq!(s.length(&w0), 4);
        assert_eq!(w0.word.as_ref().unwrap().len(), 4);
        let a1 = rs("A1");
        assert_eq!(
            a1.longest_element(&[1]).unwrap(),
            a1.simple_reflection(1).unwrap()
        );
    }

    #[test]
    fn w0_negates_positive_roots_and_squares_to_identity() {
        for ty in ["A4", "B3", "C4", "D5", "E6", "F4", "G2"] {
            let s = rs(ty);
            let all: Vec<usize> = (1..=s.rank()).collect();
            let w0 = s.longest_element(&all).unwrap();
            assert!(w0.compose(&w0).is_identity(), "{ty}");
            for alpha in &s.positive_roots {
                let image = w0.apply(&alpha.weight_coords);
                let neg: Vec<i64> = image.coords.iter().map(|c| -c).collect();
                assert!(s.positive_root_index(&neg).is_some(), "{ty}");
            }
        }
    }

    #[test]
    fn l_w0wi_examples() {
        // A_{p-2} with p = 7: ℓ(w_0 w_1) = p - 2.
        assert_eq!(rs("A5").l_w0wi(1).unwrap(), 5);
        // C_{(p-1)/2} with p = 7.
        assert_eq!(rs("C3").l_w0wi(1).unwrap(), 5);
        assert_eq!(rs("A1").l_w0wi(1).unwrap(), 1);
        // ℓ(w_0 w_i) = h - 1 in type A for the end nodes.
        for r in 1..=6 {
            let s = rs(&format!("A{r}"));
            assert_eq!(s.l_w0wi(1).unwrap() as i64, s.coxeter_number - 1);
            assert_eq!(s.l_w0wi(r).unwrap() as i64, s.coxeter_number - 1);
        }
        assert!(matches!(
            rs("B3").l_w0wi(1),
            Err(Error::NotMinusculeIndex(1))
        ));
    }

    #[test]
    fn make_dominant_examples() {
        let a1 = rs("A1");
        let (mu, w) = a1.make_dominant(&Weight::new(vec![-3])).unwrap();
        assert_eq!(mu, Weight::new(vec![3]));
        assert_eq!(w, a1.simple_reflection(1).unwrap());

        let a2 = rs("A2");
        let dom = Weight::new(vec![2, 5]);
        let (mu, w) = a2.make_dominant(&dom).unwrap();
        assert_eq!(mu, dom);
        assert!(w.is_identity());

        // w_0(ρ) is antidominant; the witness composed with w_0 fixes ρ.
        let all = vec![1, 2];
        let w0 = a2.longest_element(&all).unwrap();
        let image = w0.apply(&a2.rho);
        let (mu, w) = a2.make_dominant(&image).unwrap();
        assert_eq!(mu, a2.rho);
        assert_eq!(w.compose(&w0).apply(&a2.rho), a2.rho);
    }

    #[test]
    fn random_words_have_consistent_lengths() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for ty in crate::classify::all_types(6) {
            let s = RootSystem::get(ty);
            for _ in 0..20 {
                let len = rng.gen_range(0..=30);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=s.rank())).collect();
                let mut w = WeylElement::identity(s.rank());
                for &i in &word {
                    w = s.simple_reflection(i).unwrap().compose(&w);
                }
                let full = s.length(&w);
                assert!(full <= word.len(), "{ty}: length exceeds word length");
                // Dropping the final letter changes the length by exactly 1.
                if !word.is_empty() {
                    let mut v = WeylElement::identity(s.rank());
                    for &i in &word[..word.len() - 1] {
                        v = s.simple_reflection(i).unwrap().compose(&v);
                    }
                    let trimmed = s.length(&v);
                    assert_eq!(
                        trimmed.abs_diff(full),
                        1,
                        "{ty}: dropping a letter moved length from {full} to {trimmed}"
                    );
                }
            }
        }
    }

    #[test]
    fn equality_cases_of_l_w0wi() {
        // ℓ(w_0 w_i) = h - 1 exactly for (A_r, i ∈ {1, r}) and (C_r, i = 1),
        // which includes (B_2, i = 2) since B_2 = C_2.
        for ty in crate::classify::all_types(8) {
            let s = RootSystem::get(ty);
            for &i in &s.j_set {
                let equal = s.l_w0wi(i).unwrap() as i64 == s.coxeter_number - 1;
                let expected = match s.ty.family {
                    crate::rootsys::Family::A => i == 1 || i == s.rank(),
                    crate::rootsys::Family::C => i == 1,
                    crate::rootsys::Family::B => {
                        s.ty == RootSystemType::new(crate::rootsys::Family::B, 2).unwrap() && i == 2
                    }
                    _ => false,
                };
                assert_eq!(equal, expected, "{ty}, i = {i}");
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let s = rs("F4");
        let w = s
            .simple_reflection(1)
            .unwrap()
            .compose(&s.simple_reflection(3).unwrap())
            .compose(&s.simple_reflection(2).unwrap());
        assert!(w.compose(&w.inverse()).is_identity());
        assert!(w.inverse().compose(&w).is_identity());
    }
}
