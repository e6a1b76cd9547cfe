//! Affine Weyl group `W_l`, extended group `Ŵ_l`, and alcove geometry.
//!
//! An [`AffineElement`] is a pair (finite Weyl element `w`, translation
//! weight `μ`) acting linearly by `x ↦ w(x) + lμ`; the dot action shifts
//! by ρ: `g • λ = w(λ + ρ) − ρ + lμ`. Elements with `μ ∈ ℤR` lie in `W_l`,
//! general `μ ∈ X` gives `Ŵ_l`.
//!
//! The lowest alcove is `C_l = { λ : 0 < ⟨λ+ρ, α∨⟩ < l for all α > 0 }`;
//! its closure is a strict fundamental domain for the dot action of `W_l`,
//! which is what `reduce_to_closed_alcove` computes, together with a group
//! witness. A breadth-first orbit generator over a coordinate box serves
//! as the independent oracle for every membership claim.

use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylElement;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;

/// Element of the (extended) affine Weyl group at level `l`.
///
/// Acts on `x ∈ X` by `x ↦ finite(x) + l·translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineElement {
    pub finite: WeylElement,
    pub translation: Weight,
    pub level: i64,
}

impl AffineElement {
    pub fn identity(rank: usize, level: i64) -> Self {
        AffineElement {
            finite: WeylElement::identity(rank),
            translation: Weight::zero(rank),
            level,
        }
    }

    /// The translation `t(l·μ)`.
    pub fn translation_by(mu: Weight, level: i64) -> Self {
        AffineElement {
            finite: WeylElement::identity(mu.rank()),
            translation: mu,
            level,
        }
    }

    /// The affine reflection `s_{α, kl}` in the hyperplane
    /// `⟨x, α∨⟩ = kl`, for the positive root with the given index.
    pub fn wall_reflection(rs: &RootSystem, root_index: usize, k: i64, level: i64) -> Self {
        let alpha = &rs.positive_roots[root_index];
        AffineElement {
            finite: rs.root_reflection(alpha),
            translation: alpha.weight_coords.scaled(k),
            level,
        }
    }

    pub fn check_level(&self, other: &AffineElement) -> Result<()> {
        if self.level == other.level {
            Ok(())
        } else {
            Err(Error::LevelMismatch(self.level, other.level))
        }
    }

    /// Linear action `x ↦ finite(x) + l·translation`.
    pub fn apply(&self, x: &Weight) -> Weight {
        self.finite
            .apply(x)
            .add(&self.translation.scaled(self.level))
    }

    /// Dot action `g • λ = finite(λ + ρ) − ρ + l·translation`.
    pub fn dot_apply(&self, rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
        rs.check_weight(lambda)?;
        Ok(self.apply(&lambda.add(&rs.rho)).sub(&rs.rho))
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &AffineElement) -> Result<AffineElement> {
        self.check_level(other)?;
        Ok(AffineElement {
            finite: self.finite.compose(&other.finite),
            translation: self.finite.apply(&other.translation).add(&self.translation),
            level: self.level,
        })
    }

    pub fn inverse(&self) -> AffineElement {
        let finv = self.finite.inverse();
        let translation = finv.apply(&self.translation).scaled(-1);
        AffineElement {
            finite: finv,
            translation,
            level: self.level,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.is_zero()
    }

    /// Whether the element lies in `W_l` (translation in the root lattice)
    /// rather than just `Ŵ_l`.
    pub fn in_unextended_group(&self, rs: &RootSystem) -> Result<bool> {
        Ok(rs.root_lattice_coords(&self.translation)?.is_some())
    }
}

/// Where a weight sits relative to the closed lowest alcove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlcovePosition {
    Interior,
    Boundary,
    Exterior,
}

/// A weight together with its wall profile `⟨λ+ρ, α∨⟩` over all positive
/// roots (in the fixed enumeration order of the root system).
#[derive(Debug, Clone, Serialize)]
pub struct AlcovePoint {
    pub weight: Weight,
    pub level: i64,
    pub wall_profile: Vec<i64>,
    pub position: AlcovePosition,
}

/// One step of the alcove reduction, for reproducible witnesses.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReduceStep {
    /// A simple reflection `s_i` applied while dominantizing.
    Simple { i: usize },
    /// The affine reflection `s_{α, kl}` across the wall `⟨x, α∨⟩ = kl`,
    /// with `root` the 1-based index of `α` in the positive-root order.
    Wall { root: usize, k: i64 },
}

/// Result of reducing a weight into the closed lowest alcove.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub weight: Weight,
    pub witness: AffineElement,
    pub steps: Vec<ReduceStep>,
}

impl RootSystem {
    fn check_level(&self, l: i64, allow_coxeter: bool) -> Result<()> {
        let h = self.coxeter_number;
        if l > h || (allow_coxeter && l == h) {
            Ok(())
        } else {
            Err(Error::LevelTooSmall {
                level: l,
                coxeter: h,
            })
        }
    }

    /// Classify `λ` against the lowest alcove at level `l` and return all
    /// wall pairings. `allow_coxeter` admits the closed-alcove edge case
    /// `l = h`; the default contract requires `l > h`.
    pub fn alcove_position(
        &self,
        lambda: &Weight,
        l: i64,
        allow_coxeter: bool,
    ) -> Result<AlcovePoint> {
        self.check_weight(lambda)?;
        self.check_level(l, allow_coxeter)?;
        let shifted = lambda.add(&self.rho);
        let wall_profile: Vec<i64> = self
            .positive_roots
            .iter()
            .map(|alpha| crate::rootsys::pair(&shifted.coords, &alpha.coroot_coords))
            .collect();
        let position = if wall_profile.iter().all(|&v| 0 < v && v < l) {
            AlcovePosition::Interior
        } else if wall_profile.iter().all(|&v| 0 <= v && v <= l) {
            AlcovePosition::Boundary
        } else {
            AlcovePosition::Exterior
        };
        Ok(AlcovePoint {
            weight: lambda.clone(),
            level: l,
            wall_profile,
            position,
        })
    }

    /// Reduce `λ` to the unique representative of its `W_l`-dot-orbit in
    /// the closed lowest alcove, with a witness `g ∈ W_l`, `g • λ = μ`.
    ///
    /// Two phases, repeated: dominantize `x = λ + ρ` with simple
    /// reflections, then reflect the smallest-index violated positive root
    /// across the nearest wall `⟨x, α∨⟩ = kl` below the current value.
    /// Termination is enforced by asserting strict decrease of the total
    /// wall excess each round, with a hard iteration cap.
    pub fn reduce_to_closed_alcove(&self, lambda: &Weight, l: i64) -> Result<Reduction> {
        self.check_weight(lambda)?;
        self.check_level(l, false)?;

        let mut x = lambda.add(&self.rho);
        let mut witness = AffineElement::identity(self.rank(), l);
        let mut steps = Vec::new();
        let mut previous_excess: Option<i64> = None;

        for _round in 0..1_000_000 {
            // Phase 1: dominantize x.
            loop {
                let neg = (1..=self.rank()).find(|&i| x.coords[i - 1] < 0);
                match neg {
                    None => break,
                    Some(i) => {
                        let s = self.simple_reflection(i)?;
                        x = s.apply(&x);
                        witness = AffineElement {
                            finite: s,
                            translation: Weight::zero(self.rank()),
                            level: l,
                        }
                        .compose(&witness)?;
                        steps.push(ReduceStep::Simple { i });
                    }
                }
            }

            // Phase 2: find the first wall violation above level l.
            let mut excess = 0i64;
            let mut violated: Option<(usize, i64)> = None;
            for (idx, alpha) in self.positive_roots.iter().enumerate() {
                let v = crate::rootsys::pair(&x.coords, &alpha.coroot_coords);
                if v > l {
                    excess += v - l;
                    if violated.is_none() {
                        violated = Some((idx, v));
                    }
                }
            }
            if let Some(prev) = previous_excess {
                assert!(
                    excess < prev,
                    "alcove reduction failed to make progress (excess {excess} >= {prev})"
                );
            }
            previous_excess = Some(excess);

            match violated {
                None => {
                    let mu = x.sub(&self.rho);
                    debug_assert_eq!(witness.dot_apply(self, lambda)?, mu);
                    return Ok(Reduction {
                        weight: mu,
                        witness,
                        steps,
                    });
                }
                Some((idx, v)) => {
                    // Nearest wall strictly below v: k = ⌊(v-1)/l⌋ ≥ 1.
                    let k = (v - 1).div_euclid(l);
                    let op = AffineElement::wall_reflection(self, idx, k, l);
                    x = op.apply(&x);
                    witness = op.compose(&witness)?;
                    steps.push(ReduceStep::Wall { root: idx + 1, k });
                }
            }
        }
        unreachable!("alcove reduction exceeded the iteration cap");
    }

    /// Membership of `λ` in the dot-orbit of 0 under `W_l` (plain) or
    /// `Ŵ_l` (extended). The extended test uses the classification of
    /// `Ŵ_l • 0 ∩ C_l` as `{0} ∪ {(l−h)ϖ_i : i ∈ J}`, which the BFS oracle
    /// verifies independently at small rank.
    pub fn in_orbit_of_zero(&self, lambda: &Weight, l: i64, extended: bool) -> Result<bool> {
        let reduced = self.reduce_to_closed_alcove(lambda, l)?.weight;
        if reduced.is_zero() {
            return Ok(true);
        }
        if !extended {
            return Ok(false);
        }
        let shift = l - self.coxeter_number;
        Ok(self
            .j_set
            .iter()
            .any(|&i| reduced == Weight::fundamental(self.rank(), i).scaled(shift)))
    }

    /// Orbit membership decided by the truncated BFS oracle instead of the
    /// reduction fast path; for use in verification harnesses. The box
    /// radius `4l` always contains the closed-alcove representative, so
    /// the verdict is computed on the reduction of `λ`.
    pub fn in_orbit_of_zero_bfs(&self, lambda: &Weight, l: i64, extended: bool) -> Result<bool> {
        let reduced = self.reduce_to_closed_alcove(lambda, l)?.weight;
        let orbit = self.orbit_of_zero_bfs(l, extended, 4 * l)?;
        Ok(orbit.contains(&reduced))
    }

    /// The stabilizer `Ω` of the lowest alcove inside `Ŵ_l`: the identity
    /// together with `γ_i = t(lϖ_i) · w_i ∘ w_0` for `i ∈ J`.
    pub fn omega_elements(&self, l: i64) -> Result<Vec<AffineElement>> {
        self.check_level(l, false)?;
        let all: Vec<usize> = (1..=self.rank()).collect();
        let w0 = self.longest_element(&all)?;
        let mut out = vec![AffineElement::identity(self.rank(), l)];
        for &i in &self.j_set {
            let without: Vec<usize> = all.iter().copied().filter(|&k| k != i).collect();
            let wi = self.longest_element(&without)?;
            let gamma = AffineElement {
                finite: wi.compose(&w0),
                translation: Weight::fundamental(self.rank(), i),
                level: l,
            };
            out.push(gamma);
        }
        Ok(out)
    }

    /// Breadth-first generation of the dot-orbit of 0 inside the box
    /// `|coord| <= box_radius`; see [`dot_orbit_bfs`](Self::dot_orbit_bfs).
    pub fn orbit_of_zero_bfs(
        &self,
        l: i64,
        extended: bool,
        box_radius: i64,
    ) -> Result<BTreeSet<Weight>> {
        self.dot_orbit_bfs(&Weight::zero(self.rank()), l, extended, box_radius)
    }

    /// Breadth-first generation of a dot-orbit inside the box
    /// `|coord| <= box_radius`, under all `s_{α, nl}` (plain), plus the
    /// alcove stabilizer generators and their inverses (extended). This is
    /// the independent oracle for orbit membership.
    pub fn dot_orbit_bfs(
        &self,
        start: &Weight,
        l: i64,
        extended: bool,
        box_radius: i64,
    ) -> Result<BTreeSet<Weight>> {
        self.check_weight(start)?;
        self.check_level(l, false)?;
        let rank = self.rank();
        let side = 2 * box_radius + 1;
        let capacity = (side as usize)
            .checked_pow(rank as u32)
            .ok_or(Error::OracleOutOfRange {
                max_rank: 4,
                max_level: 20,
            })?;
        if capacity > 200_000_000 {
            return Err(Error::OracleOutOfRange {
                max_rank: 4,
                max_level: 20,
            });
        }

        let index_of = |w: &[i64]| -> Option<usize> {
            let mut idx = 0usize;
            for &c in w {
                if c.abs() > box_radius {
                    return None;
                }
                idx = idx * side as usize + (c + box_radius) as usize;
            }
            Some(idx)
        };

        let mut gammas: Vec<AffineElement> = Vec::new();
        if extended {
            for g in self.omega_elements(l)? {
                if !g.is_identity() {
                    gammas.push(g.inverse());
                    gammas.push(g);
                }
            }
        }

        let mut visited = vec![false; capacity];
        let mut set = BTreeSet::new();
        let origin = start.clone();
        let origin_idx = index_of(&origin.coords).ok_or(Error::OracleOutOfRange {
            max_rank: 4,
            max_level: 20,
        })?;
        visited[origin_idx] = true;
        set.insert(origin.clone());
        let mut queue = vec![origin];

        while let Some(lambda) = queue.pop() {
            let shifted = lambda.add(&self.rho);
            for alpha in &self.positive_roots {
                let v = crate::rootsys::pair(&shifted.coords, &alpha.coroot_coords);
                // s_{α,nl} • λ = λ − (v − nl)α; only nearby walls can keep
                // the image inside the box.
                let centre = v.div_euclid(l);
                for n in centre - 9..=centre + 9 {
                    let c = v - n * l;
                    if c == 0 {
                        continue;
                    }
                    let image = lambda.sub(&alpha.weight_coords.scaled(c));
                    if let Some(idx) = index_of(&image.coords) {
                        if !visited[idx] {
                            visited[idx] = true;
                            set.insert(image.clone());
                            queue.push(image);
                        }
                    }
                }
            }
            for g in &gammas {
                let image = g.dot_apply(self, &lambda)?;
                if let Some(idx) = index_of(&image.coords) {
                    if !visited[idx] {
                        visited[idx] = true;
                        set.insert(image.clone());
                        queue.push(image);
                    }
                }
            }
        }
        Ok(set)
    }
}
