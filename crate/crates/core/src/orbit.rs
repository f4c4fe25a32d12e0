//! The SL₂(ℤ) orbit of a surface and the index of its Veech group.
//!
//! Two independent enumerations of the same set:
//!
//! * [`s_plus`] — BFS over code pairs from `Code^L(I)` using the
//!   incremental right-multiplication moves, deduplicated by surface
//!   equivalence. This is the set of surfaces built from matrix code
//!   pairs.
//! * [`orbit_bfs_oracle`] — BFS over equivalence classes under the
//!   generator action (`L`, its inverse, and the quarter rotation), i.e.
//!   the literal SL₂(ℤ) orbit.
//!
//! They coincide, and their common cardinality is the index of the Veech
//! group in SL₂(ℤ); the dual computation is the cross-check.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::codes::CodePair;
use crate::error::Error;
use crate::farey::{Gen, PosMatrix};
use crate::perm::{canonical_pair, Permutation};
use crate::surface::Surface;
use crate::veech::{class_step, identity_code_pair};

/// One element of the orbit: the canonical class representative and a
/// shortest positive word reaching its code pair from `Code^L(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitState {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub matrix: PosMatrix,
}

impl OrbitState {
    pub fn surface(&self) -> Surface {
        Surface::new(self.sigma.clone(), self.tau.clone()).expect("equal degrees")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "sigma": self.sigma.to_string(),
            "tau": self.tau.to_string(),
            "matrix": self.matrix.to_string(),
            "stratum": self.surface().stratum(),
        })
    }
}

/// `S⁺(X)`: surfaces of matrix code pairs, up to equivalence. BFS from
/// `Code^L(I)` with `A ↦ A·L` giving `(ω₁, ω₁ω₂)` and `A ↦ A·R` giving
/// `(ω₁ω₂, ω₂)`; states deduplicate by canonical class, which is sound
/// because the moves commute with relabeling. Expanding `L` before `R` in
/// breadth-first order makes the representative matrices shortest words.
pub fn s_plus(x: &Surface) -> Result<Vec<OrbitState>, Error> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let start_pair = identity_code_pair(x);
    let start_key = canonical_pair(&start_pair.first, &start_pair.second);
    let mut states = Vec::new();
    let mut seen: HashSet<(Permutation, Permutation)> = HashSet::new();
    let mut queue: VecDeque<(CodePair, PosMatrix)> = VecDeque::new();
    states.push(OrbitState {
        sigma: start_key.0.clone(),
        tau: start_key.1.clone(),
        matrix: PosMatrix::identity(),
    });
    seen.insert(start_key);
    queue.push_back((start_pair, PosMatrix::identity()));
    while let Some((pair, matrix)) = queue.pop_front() {
        let by_l = (
            CodePair {
                first: pair.first.clone(),
                second: pair.first.compose(&pair.second),
            },
            matrix.mul(&PosMatrix::l()),
        );
        let by_r = (
            CodePair {
                first: pair.first.compose(&pair.second),
                second: pair.second.clone(),
            },
            matrix.mul(&PosMatrix::r()),
        );
        for (next, next_matrix) in [by_l, by_r] {
            let key = canonical_pair(&next.first, &next.second);
            if !seen.contains(&key) {
                states.push(OrbitState {
                    sigma: key.0.clone(),
                    tau: key.1.clone(),
                    matrix: next_matrix,
                });
                seen.insert(key);
                queue.push_back((next, next_matrix));
            }
        }
    }
    Ok(states)
}

/// The literal SL₂(ℤ) orbit of the class of `X`: BFS under the generator
/// action `L`, `L⁻¹` and the quarter rotation `(σ, τ) ↦ (τ, σ⁻¹)`.
pub fn orbit_bfs_oracle(x: &Surface) -> Result<BTreeSet<(Permutation, Permutation)>, Error> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = x.canonical_class();
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some((sigma, tau)) = queue.pop_front() {
        let successors = [
            class_step(&sigma, &tau, Gen::L),
            class_step(&sigma, &tau, Gen::LInv),
            (tau.clone(), sigma.inverse()), // quarter rotation
        ];
        for (s, t) in successors {
            let key = canonical_pair(&s, &t);
            if seen.insert(key.clone()) {
                queue.push_back(key);
            }
        }
    }
    Ok(seen)
}

/// The index of the Veech group in SL₂(ℤ): `|S⁺(X)|`. Must equal the size
/// of the orbit oracle (asserted by the acceptance suite).
pub fn veech_index(x: &Surface) -> Result<u64, Error> {
    Ok(s_plus(x)?.len() as u64)
}
