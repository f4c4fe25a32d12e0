//! Veech-group membership.
//!
//! A matrix `A ∈ SL₂⁺(ℤ)` lies in the Veech group of a connected surface
//! iff `Code^L(A)` is simultaneously conjugate to `Code^L(I)`; the
//! conjugating relabeling is the witness, and it is exactly the square
//! relabeling induced by an affine diffeomorphism of derivative `A`.
//! General matrices in SL₂(ℤ) are decided through the generator action on
//! surface classes. The witnesses organize into the group `G_X` with
//! normal subgroup `S_X`; the quotient is isomorphic to the set of
//! realized Veech code pairs under `⊙`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::codes::{code_left_matrix, CodePair};
use crate::error::Error;
use crate::farey::{sl2z_word, Gen, IntMatrix, PosMatrix};
use crate::perm::{self, Permutation};
use crate::surface::Surface;

/// Default bound for the exhaustive `S_n` scans of `G_X` and `S_X`.
pub const DEFAULT_SCAN_BOUND: usize = 8;

/// `Code^L(I) = (Code^L(0), Code^L(∞)) = (σ, σ⁻¹τσ)`.
pub fn identity_code_pair(x: &Surface) -> CodePair {
    code_left_matrix(x, &PosMatrix::identity())
}

/// All code pairs `Code^L(A)` over `A ∈ SL₂⁺(ℤ)`: the closure of
/// `Code^L(I)` under the two incremental moves. Finite inside `S_n × S_n`.
pub fn realized_pairs(x: &Surface) -> HashSet<CodePair> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let start = identity_code_pair(x);
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(pair) = queue.pop_front() {
        let by_l = CodePair {
            first: pair.first.clone(),
            second: pair.first.compose(&pair.second),
        };
        let by_r = CodePair {
            first: pair.first.compose(&pair.second),
            second: pair.second.clone(),
        };
        for next in [by_l, by_r] {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Membership of `A ∈ SL₂⁺(ℤ)` in the Veech group: returns the witness
/// relabeling `ω` with `relabel(Code^L(I), ω) = Code^L(A)`, if any.
pub fn veech_contains_positive(
    x: &Surface,
    a: &PosMatrix,
) -> Result<Option<Permutation>, Error> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let ipair = identity_code_pair(x);
    let apair = code_left_matrix(x, a);
    Ok(perm::simultaneous_conjugator(
        &ipair.first,
        &ipair.second,
        &apair.first,
        &apair.second,
    ))
}

/// The action of a generator letter on surface classes: the image of `(σ,τ)`
/// is the surface carrying an affine map onto `X(σ,τ)` with that derivative.
/// `L` sends `(σ, τ)` to `(σ, τσ)` — the left codes of the slopes `0` and
/// `1` — and `R` to `(στ, τ)` up to relabeling; inverses undo them.
pub(crate) fn class_step(
    sigma: &Permutation,
    tau: &Permutation,
    g: Gen,
) -> (Permutation, Permutation) {
    match g {
        Gen::L => (sigma.clone(), tau.compose(sigma)),
        Gen::LInv => (sigma.clone(), tau.compose(&sigma.inverse())),
        Gen::R => (sigma.compose(tau), tau.clone()),
        Gen::RInv => (sigma.compose(&tau.inverse()), tau.clone()),
    }
}

/// Membership of an arbitrary `B ∈ SL₂(ℤ)` in the Veech group: decompose
/// `B` into generator letters and walk the class action; `B` stabilizes the
/// surface iff the walk returns to the class of `X`. Derivatives compose
/// contravariantly, so the letters are applied in word order.
pub fn veech_contains(x: &Surface, b: &IntMatrix) -> Result<bool, Error> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let word = sl2z_word(b);
    let mut sigma = x.sigma().clone();
    let mut tau = x.tau().clone();
    for &g in &word {
        (sigma, tau) = class_step(&sigma, &tau, g);
    }
    Ok(perm::canonical_pair(&sigma, &tau) == x.canonical_class())
}

/// Whether `Code^L_X(A)` is conjugate to the identity code pair of the
/// `90k`-degree rotation of `X`. When this holds, `A·Jᵏ` (with `J` the
/// clockwise quarter turn) lies in the Veech group of `X`.
pub fn rotated_code_test(x: &Surface, a: &PosMatrix, k: u32) -> Result<bool, Error> {
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    assert!((1..=3).contains(&k), "rotation count must be 1, 2 or 3");
    let rot_pair = identity_code_pair(&x.rotate(k));
    let apair = code_left_matrix(x, a);
    Ok(perm::simultaneous_conjugator(
        &rot_pair.first,
        &rot_pair.second,
        &apair.first,
        &apair.second,
    )
    .is_some())
}

/// The rotation matrix paired with [`rotated_code_test`]: `A·Jᵏ` for
/// `J = [[0,1],[-1,0]]`.
pub fn rotated_matrix(a: &PosMatrix, k: u32) -> IntMatrix {
    let mut m = a.to_int();
    for _ in 0..k {
        m = m.mul(&IntMatrix::rot_cw());
    }
    m
}

/// `S_X`: all relabelings fixing both components of `Code^L(I)`.
/// Exhaustive over `S_n`; refuses degrees above `bound`.
pub fn group_s(x: &Surface, bound: usize) -> Result<Vec<Permutation>, Error> {
    let n = x.n();
    if n > bound {
        return Err(Error::BoundExceeded(n, bound));
    }
    let ipair = identity_code_pair(x);
    Ok(perm::all_permutations(n)
        .filter(|w| ipair.relabel(w) == ipair)
        .collect())
}

/// `G_X`: all relabelings sending `Code^L(I)` to some realized code pair.
/// By the membership theorem this is the same as sending it to the code
/// pair of a Veech element (tested, not assumed).
pub fn group_g(x: &Surface, bound: usize) -> Result<Vec<Permutation>, Error> {
    let n = x.n();
    if n > bound {
        return Err(Error::BoundExceeded(n, bound));
    }
    let realized = realized_pairs(x);
    let ipair = identity_code_pair(x);
    Ok(perm::all_permutations(n)
        .filter(|w| realized.contains(&ipair.relabel(w)))
        .collect())
}

/// An element of the code group: a realized Veech code pair together with
/// a witness relabeling taking `Code^L(I)` to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeGroupElement {
    pub pair: CodePair,
    pub witness: Permutation,
}

/// The group `(Code^L(Veech⁺(X)), ⊙)`, carried by witnesses: the product
/// of the elements of `A` and `B` is the element of `AB`.
pub struct CodeGroup {
    ipair: CodePair,
    elements: Vec<CodeGroupElement>,
    index: HashMap<CodePair, usize>,
}

impl CodeGroup {
    /// Collects the realized pairs conjugate to `Code^L(I)` with one
    /// witness each, scanning `S_n` (bounded).
    pub fn new(x: &Surface, bound: usize) -> Result<CodeGroup, Error> {
        if !x.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = x.n();
        if n > bound {
            return Err(Error::BoundExceeded(n, bound));
        }
        let realized = realized_pairs(x);
        let ipair = identity_code_pair(x);
        let mut elements: Vec<CodeGroupElement> = Vec::new();
        let mut index = HashMap::new();
        for w in perm::all_permutations(n) {
            let pair = ipair.relabel(&w);
            if realized.contains(&pair) && !index.contains_key(&pair) {
                index.insert(pair.clone(), elements.len());
                elements.push(CodeGroupElement { pair, witness: w });
            }
        }
        Ok(CodeGroup { ipair, elements, index })
    }

    pub fn identity_pair(&self) -> &CodePair {
        &self.ipair
    }

    pub fn elements(&self) -> &[CodeGroupElement] {
        &self.elements
    }

    pub fn identity_element(&self) -> CodeGroupElement {
        CodeGroupElement {
            pair: self.ipair.clone(),
            witness: Permutation::identity(self.ipair.first.degree()),
        }
    }

    pub fn contains_pair(&self, pair: &CodePair) -> bool {
        self.index.contains_key(pair)
    }

    /// `Code^L(A) ⊙ Code^L(B) = Code^L(AB)`. With `Code^L(A)` witnessed by
    /// `u` and `Code^L(B)` by `v`, the product is witnessed by `v·u`
    /// (v first): pushing `Code^L(B) = relabel(Code^L(I), v)` through the
    /// incremental moves of `A` relabels the whole computation by `u`.
    pub fn op(
        &self,
        e1: &CodeGroupElement,
        e2: &CodeGroupElement,
    ) -> Result<CodeGroupElement, Error> {
        if !self.contains_pair(&e1.pair) || !self.contains_pair(&e2.pair) {
            return Err(Error::UnrealizedOperand);
        }
        let witness = e2.witness.compose(&e1.witness);
        let pair = self.ipair.relabel(&witness);
        debug_assert!(self.contains_pair(&pair), "the code group is closed");
        Ok(CodeGroupElement { pair, witness })
    }

    /// Inverse through witness inversion.
    pub fn invert(&self, e: &CodeGroupElement) -> Result<CodeGroupElement, Error> {
        if !self.contains_pair(&e.pair) {
            return Err(Error::UnrealizedOperand);
        }
        let witness = e.witness.inverse();
        let pair = self.ipair.relabel(&witness);
        Ok(CodeGroupElement { pair, witness })
    }
}
