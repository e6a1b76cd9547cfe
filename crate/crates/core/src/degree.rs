//! Exact evaluation of the Weyl degree formula and friends.
//!
//! `d(λ) = Π_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩` is computed with big-integer
//! numerator and denominator and an exactness check on the division; no
//! floating point appears anywhere in this module. The level-count
//! profile `e(k)` counts, for a minuscule index `i`, the roots outside
//! the parabolic subsystem by coroot height, and yields the product form
//! `d((l−h)ϖ_i) = Π_k ((l−h+k)/k)^{e(k)}`.

use crate::rootsys::{pair, RootSystem, Weight};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// A value of the Weyl degree formula, optionally with the per-root
/// factors `(⟨λ+ρ, α∨⟩, ⟨ρ, α∨⟩)` that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeValue {
    pub value: BigUint,
    pub factor_trace: Option<Vec<(i64, i64)>>,
}

impl Serialize for DegreeValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // Degrees overflow JSON numbers quickly; always emit a string.
        match &self.factor_trace {
            None => serializer.collect_str(&self.value),
            Some(trace) => {
                let mut s = serializer.serialize_struct("DegreeValue", 2)?;
                s.serialize_field("value", &self.value.to_string())?;
                s.serialize_field("factors", trace)?;
                s.end()
            }
        }
    }
}

/// Counts `e(k)` of roots in `R^+ \ R_i^+` with coroot height `k`,
/// for `k = 1..h-1`.
#[derive(Debug, Clone, Serialize)]
pub struct LevelProfile {
    pub index: usize,
    pub counts: BTreeMap<i64, usize>,
}

impl LevelProfile {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

impl RootSystem {
    /// The Weyl degree `d(λ)` of a dominant weight.
    pub fn weyl_degree(&self, lambda: &Weight) -> Result<DegreeValue> {
        self.weyl_degree_impl(lambda, false)
    }

    /// Same, retaining the factor trace.
    pub fn weyl_degree_traced(&self, lambda: &Weight) -> Result<DegreeValue> {
        self.weyl_degree_impl(lambda, true)
    }

    fn weyl_degree_impl(&self, lambda: &Weight, trace: bool) -> Result<DegreeValue> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NonDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.rho);
        let mut numerator = BigUint::one();
        let mut denominator = BigUint::one();
        let mut factors = trace.then(Vec::new);
        for alpha in &self.positive_roots {
            let num = pair(&shifted.coords, &alpha.coroot_coords);
            let den = alpha.coroot_height();
            numerator *= BigUint::from(num as u64);
            denominator *= BigUint::from(den as u64);
            if let Some(f) = factors.as_mut() {
                f.push((num, den));
            }
        }
        let (value, rem) = num_integer::Integer::div_rem(&numerator, &denominator);
        assert!(rem.is_zero(), "Weyl degree product must be integral");
        assert!(!value.is_zero());
        Ok(DegreeValue {
            value,
            factor_trace: factors,
        })
    }

    /// The level profile of a minuscule index `i ∈ J`.
    pub fn level_profile(&self, i: usize) -> Result<LevelProfile> {
        if !self.j_set.contains(&i) {
            return Err(Error::NotMinusculeIndex(i));
        }
        let mut counts = BTreeMap::new();
        for alpha in &self.positive_roots {
            if alpha.root_coords[i - 1] > 0 {
                *counts.entry(alpha.coroot_height()).or_insert(0) += 1;
            }
        }
        Ok(LevelProfile { index: i, counts })
    }

    /// `Π_{k=1}^{h-1} ((l−h+k)/k)^{e(k)}`, which equals
    /// `d((l−h)ϖ_i)` for `i ∈ J` and `l > h`.
    pub fn degree_via_profile(&self, i: usize, l: i64) -> Result<DegreeValue> {
        if l <= self.coxeter_number {
            return Err(Error::LevelTooSmall {
                level: l,
                coxeter: self.coxeter_number,
            });
        }
        let profile = self.level_profile(i)?;
        let h = self.coxeter_number;
        let mut numerator = BigUint::one();
        let mut denominator = BigUint::one();
        for (&k, &e) in &profile.counts {
            let num = BigUint::from((l - h + k) as u64).pow(e as u32);
            let den = BigUint::from(k as u64).pow(e as u32);
            numerator *= num;
            denominator *= den;
        }
        let (value, rem) = num_integer::Integer::div_rem(&numerator, &denominator);
        assert!(rem.is_zero(), "profile product must be integral");
        Ok(DegreeValue {
            value,
            factor_trace: None,
        })
    }

    /// All dominant weights (restricted for `p`, when given) with degree
    /// at most `bound`, in lexicographic coordinate order. Exhaustive:
    /// `d` strictly increases in every coordinate, so the walk prunes as
    /// soon as a prefix exceeds the bound.
    pub fn enumerate_small_degree(
        &self,
        bound: u64,
        restricted_for: Option<i64>,
    ) -> Vec<(Weight, DegreeValue)> {
        let bound = BigUint::from(bound);
        let mut coords = vec![0i64; self.rank()];
        let mut out = Vec::new();
        self.enumerate_rec(0, &mut coords, &bound, restricted_for, &mut out);
        out
    }

    fn enumerate_rec(
        &self,
        idx: usize,
        coords: &mut Vec<i64>,
        bound: &BigUint,
        restricted_for: Option<i64>,
        out: &mut Vec<(Weight, DegreeValue)>,
    ) {
        let mut v = 0i64;
        loop {
            if let Some(p) = restricted_for {
                if v >= p {
                    break;
                }
            }
            coords[idx] = v;
            let lambda = Weight::new(coords.clone());
            let d = self
                .weyl_degree(&lambda)
                .expect("enumeration weights are dominant");
            if d.value > *bound {
                break;
            }
            if idx + 1 == self.rank() {
                out.push((lambda, d));
            } else {
                self.enumerate_rec(idx + 1, coords, bound, restricted_for, out);
            }
            v += 1;
        }
        coords[idx] = 0;
    }
}
