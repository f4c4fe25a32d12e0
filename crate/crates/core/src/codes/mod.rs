//! Cutting sequences and the codes of a rational direction.
//!
//! For a slope `p/q` the segment `(0,0) → (q,p)` crosses lattice lines; the
//! word of crossings is the cutting sequence. Substituting `x ↦ σ`, `y ↦ τ`
//! gives `Code(p/q)`, the permutation sending each square to the square at
//! the far end of its saddle connection. Multiplying by `τσ` (resp. `στ`)
//! yields the left (resp. right) code, whose cycles are the cylinders of
//! the direction and whose cycle lengths are their areas.
//!
//! DEGENERATE DIRECTIONS. The horizontal and vertical directions carry
//! formal inverse letters: this crate uses `Cut(0) = y⁻¹` and
//! `Cut(∞) = x⁻¹`, hence `Code(0) = τ⁻¹`, `Code(∞) = σ⁻¹`,
//! `Code^L(0) = σ` and `Code^L(∞) = σ⁻¹τσ`. This is the unique assignment
//! consistent with the concatenation law for mediants, with the seed ring
//! diagram `B(σ, σ⁻¹τσ)`, and with the geometric tracer in
//! [`trace::trace_oracle`] — which is the ground truth here. The swapped
//! assignment is still available for audit via [`degenerate_audit`].

pub mod trace;

use std::fmt;

use crate::error::Error;
use crate::farey::{self, CFrac, PosMatrix, Slope};
use crate::perm::Permutation;
use crate::surface::Surface;

pub use trace::trace_oracle;

/// A letter of a cutting sequence. `X`/`Y` count vertical/horizontal
/// lattice-line crossings; the formal inverses occur only for the two
/// degenerate directions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    X,
    Y,
    XInv,
    YInv,
}

impl Letter {
    fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XInv,
            Letter::XInv => Letter::X,
            Letter::Y => Letter::YInv,
            Letter::YInv => Letter::Y,
        }
    }
}

/// A word over `{x, y, x⁻¹, y⁻¹}`. Prints as `xxyxx`, with `X`/`Y` for the
/// inverse letters.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation followed by free reduction (cancelling adjacent
    /// mutually inverse letters). Reduction only ever fires where a
    /// degenerate word participates: non-degenerate cutting sequences
    /// contain no inverse letters.
    pub fn concat_reduced(parts: &[&Word]) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for part in parts {
            for &letter in &part.0 {
                if stack.last() == Some(&letter.inverse()) {
                    stack.pop();
                } else {
                    stack.push(letter);
                }
            }
        }
        Word(stack)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for letter in &self.0 {
            let c = match letter {
                Letter::X => 'x',
                Letter::Y => 'y',
                Letter::XInv => 'X',
                Letter::YInv => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The cutting sequence of the segment `(0,0) → (q,p)`.
///
/// Interior crossings of vertical lines `x = a` happen at parameter `a/q`,
/// horizontal ones at `b/p`; they are merged by exact cross-multiplication
/// (ties are impossible since `gcd(p,q) = 1`). The word has `q−1` letters
/// `x` and `p−1` letters `y`.
pub fn cut(r: Slope) -> Word {
    if r.is_zero() {
        return Word(vec![Letter::YInv]);
    }
    if r.is_infinity() {
        return Word(vec![Letter::XInv]);
    }
    let (q, p) = r.direction();
    let mut letters = Vec::with_capacity((p + q - 2) as usize);
    let mut a = 1;
    let mut b = 1;
    while a < q || b < p {
        let take_x = if a < q && b < p { a * p < b * q } else { a < q };
        if take_x {
            letters.push(Letter::X);
            a += 1;
        } else {
            letters.push(Letter::Y);
            b += 1;
        }
    }
    Word(letters)
}

/// Verifies both concatenation laws for a Farey pair `r1 <ₙ r2`:
/// `Cut(r1⊕r2) = reduce(Cut(r1)·yx·Cut(r2)) = reduce(Cut(r2)·xy·Cut(r1))`.
pub fn cut_concat_check(r1: Slope, r2: Slope) -> Result<bool, Error> {
    let m = farey::farey_add(r1, r2)?;
    let lhs = cut(m);
    let w1 = cut(r1);
    let w2 = cut(r2);
    let yx = Word(vec![Letter::Y, Letter::X]);
    let xy = Word(vec![Letter::X, Letter::Y]);
    let main = Word::concat_reduced(&[&w1, &yx, &w2]);
    let variant = Word::concat_reduced(&[&w2, &xy, &w1]);
    Ok(lhs == main && lhs == variant)
}

/// `Code(r)`: the cutting sequence evaluated on the surface, substituting
/// `x ↦ σ`, `y ↦ τ` (and inverses) and composing left to right.
pub fn code(x: &Surface, r: Slope) -> Permutation {
    let word = cut(r);
    let mut acc = Permutation::identity(x.n());
    for letter in &word.0 {
        let g = match letter {
            Letter::X => x.sigma().clone(),
            Letter::Y => x.tau().clone(),
            Letter::XInv => x.sigma().inverse(),
            Letter::YInv => x.tau().inverse(),
        };
        acc = acc.compose(&g);
    }
    acc
}

/// `Code^L(r) = Code(r)·τσ`: one cycle per cylinder of the direction,
/// listing its left boundaries in order; cycle length = cylinder area.
pub fn code_left(x: &Surface, r: Slope) -> Permutation {
    code(x, r).compose(x.tau()).compose(x.sigma())
}

/// `Code^R(r) = Code(r)·στ`; equals `Code^L(r)·Θ`.
pub fn code_right(x: &Surface, r: Slope) -> Permutation {
    code(x, r).compose(x.sigma()).compose(x.tau())
}

/// One cylinder of a decomposition: the cyclic list of its left-boundary
/// squares and its area.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    pub cycle: Vec<usize>,
    pub area: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderDecomposition {
    pub slope: Slope,
    pub cylinders: Vec<Cylinder>,
}

impl CylinderDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "slope": self.slope.to_string(),
            "cylinders": self.cylinders.iter().map(|c| {
                serde_json::json!({"cycle": c.cycle, "area": c.area})
            }).collect::<Vec<_>>(),
        })
    }
}

/// The cylinder decomposition in direction `r`: the cycles of `Code^L(r)`,
/// fixed points included as area-1 cylinders. Areas sum to `n`.
pub fn cylinders(x: &Surface, r: Slope) -> CylinderDecomposition {
    let left = code_left(x, r);
    let cylinders: Vec<Cylinder> = left
        .cycles_with_fixed()
        .into_iter()
        .map(|cycle| Cylinder {
            area: cycle.len() as u64,
            cycle,
        })
        .collect();
    debug_assert_eq!(
        cylinders.iter().map(|c| c.area).sum::<u64>(),
        x.n() as u64
    );
    CylinderDecomposition { slope: r, cylinders }
}

/// The left codes of the two column slopes of a matrix in SL₂⁺(ℤ).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodePair {
    pub first: Permutation,
    pub second: Permutation,
}

impl CodePair {
    pub fn relabel(&self, w: &Permutation) -> CodePair {
        CodePair {
            first: self.first.relabel(w),
            second: self.second.relabel(w),
        }
    }
}

impl fmt::Display for CodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl fmt::Debug for CodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Code^L(A) = (Code^L(b/a), Code^L(d/c))` for the columns `(a,b)`, `(c,d)`.
///
/// Right multiplication acts incrementally: with `(ω₁, ω₂) = Code^L(A)`,
/// `Code^L(A·L) = (ω₁, ω₁ω₂)` and `Code^L(A·R) = (ω₁ω₂, ω₂)`.
pub fn code_left_matrix(x: &Surface, a: &PosMatrix) -> CodePair {
    let (r1, r2) = a.column_slopes();
    CodePair {
        first: code_left(x, r1),
        second: code_left(x, r2),
    }
}

/// Whether `r` is a simple closed curve at square `k`: its left code fixes
/// `k`, i.e. `k` spans an area-1 cylinder bounded by one saddle connection.
pub fn is_scc_at(x: &Surface, r: Slope, k: usize) -> Result<bool, Error> {
    if k < 1 || k > x.n() {
        return Err(Error::LabelOutOfRange(k, x.n()));
    }
    Ok(code_left(x, r).apply(k) == k)
}

/// Left code of an arbitrary continued-fraction term list (the empty list
/// is the slope `0/1`, a trailing 0 collapses per the mediant laws).
pub fn code_left_terms(x: &Surface, terms: &[u64]) -> Permutation {
    code_left(x, farey::eval_terms(terms))
}

/// Least `t > 0` such that `[a1,...,am,t]` is a simple closed curve at `k`,
/// given that the left code `P` of the prefix is an `n`-cycle.
///
/// Uses the parity-matched extension identity: appending `t` to a prefix of
/// odd length `m` gives the left code `Q·Pᵗ`, and `Pᵗ·Q` for even `m`,
/// where `Q` is the left code of the prefix with its last term dropped.
/// The result is re-verified against [`is_scc_at`] on the extended slope.
pub fn scc_extension(x: &Surface, prefix: &CFrac, k: usize) -> Result<u64, Error> {
    if k < 1 || k > x.n() {
        return Err(Error::LabelOutOfRange(k, x.n()));
    }
    let p_code = code_left(x, prefix.value());
    if p_code.cycles_with_fixed().len() != 1 {
        return Err(Error::NotFullCycle);
    }
    let q_code = code_left_terms(x, &prefix.parent());
    let odd = prefix.len() % 2 == 1;
    let mut p_pow = p_code.clone();
    for t in 1..=p_code.order() {
        let v = if odd {
            q_code.compose(&p_pow)
        } else {
            p_pow.compose(&q_code)
        };
        if v.apply(k) == k {
            let extended = farey::eval_terms(&prefix.extended(t));
            assert_eq!(
                code_left(x, extended),
                v,
                "extension identity disagrees with the direct left code"
            );
            assert!(is_scc_at(x, extended, k)?);
            return Ok(t);
        }
        p_pow = p_pow.compose(&p_code);
    }
    unreachable!("an n-cycle reaches every square, so some extension works")
}

/// The arithmetic progression `Ω_s = {u + v·t : t ≥ 0}` of all `i` such
/// that `[a1,...,ak,i]` is a simple closed curve at `s`, or `None` if no
/// such `i` exists. `u` is the least member; `v` is the minimal period,
/// the length of the relevant cycle of the prefix left code.
pub fn scc_progression(
    x: &Surface,
    prefix: &CFrac,
    s: usize,
) -> Result<Option<(u64, u64)>, Error> {
    if s < 1 || s > x.n() {
        return Err(Error::LabelOutOfRange(s, x.n()));
    }
    let p_code = code_left(x, prefix.value());
    let q_code = code_left_terms(x, &prefix.parent());
    // membership of i: odd m: Pⁱ(Q(s)) = s; even m: Pⁱ(s) = Q⁻¹(s).
    let (start, target) = if prefix.len() % 2 == 1 {
        (q_code.apply(s), s)
    } else {
        (s, q_code.inverse().apply(s))
    };
    let mut u = None;
    let mut cur = start;
    let mut i: u64 = 0;
    loop {
        cur = p_code.apply(cur);
        i += 1;
        if cur == target && u.is_none() {
            u = Some(i);
        }
        if cur == start {
            break;
        }
    }
    // i is now the length of the P-cycle through `start`.
    Ok(u.map(|u| (u, i)))
}

/// If both the supplied continued fraction and its parent (last term
/// dropped) are simple closed curves at `m`, the surface contains a torus:
/// `σ` and `τ` both fix `m`. Returns `m` in that case, checking the fixed
/// points as a guard against convention drift.
pub fn torus_from_scc_pair(
    x: &Surface,
    extended: &CFrac,
    m: usize,
) -> Result<Option<usize>, Error> {
    if m < 1 || m > x.n() {
        return Err(Error::LabelOutOfRange(m, x.n()));
    }
    let short = farey::eval_terms(&extended.parent());
    if is_scc_at(x, short, m)? && is_scc_at(x, extended.value(), m)? {
        assert_eq!(x.sigma().apply(m), m, "sigma must fix a torus square");
        assert_eq!(x.tau().apply(m), m, "tau must fix a torus square");
        Ok(Some(m))
    } else {
        Ok(None)
    }
}

/// Whether the surface is a disjoint union of tori: `Θ = id`, i.e. `σ` and
/// `τ` commute and no marked point is a cone point.
pub fn is_union_of_tori(x: &Surface) -> bool {
    x.theta().is_identity()
}

/// The cut/code values of one degenerate direction under one convention.
#[derive(Clone, Debug)]
pub struct DegenerateCodes {
    pub slope: Slope,
    pub cut: Word,
    pub code: Permutation,
    pub code_left: Permutation,
    pub code_right: Permutation,
}

/// Both possible conventions for the degenerate directions, for audit.
///
/// `adopted` is what this crate computes (`Cut(0) = y⁻¹`, `Cut(∞) = x⁻¹`);
/// `swapped` is the other assignment (`Cut(0) = x⁻¹`, `Cut(∞) = y⁻¹`).
/// Only `adopted` matches the geometric tracer and the mediant laws.
#[derive(Clone, Debug)]
pub struct DegenerateAudit {
    pub adopted: [DegenerateCodes; 2],
    pub swapped: [DegenerateCodes; 2],
}

pub fn degenerate_audit(x: &Surface) -> DegenerateAudit {
    let by_word = |slope: Slope, word: Word| {
        let mut c = Permutation::identity(x.n());
        for letter in &word.0 {
            let g = match letter {
                Letter::X => x.sigma().clone(),
                Letter::Y => x.tau().clone(),
                Letter::XInv => x.sigma().inverse(),
                Letter::YInv => x.tau().inverse(),
            };
            c = c.compose(&g);
        }
        DegenerateCodes {
            slope,
            code_left: c.compose(x.tau()).compose(x.sigma()),
            code_right: c.compose(x.sigma()).compose(x.tau()),
            code: c,
            cut: word,
        }
    };
    DegenerateAudit {
        adopted: [
            by_word(Slope::zero(), Word(vec![Letter::YInv])),
            by_word(Slope::infinity(), Word(vec![Letter::XInv])),
        ],
        swapped: [
            by_word(Slope::zero(), Word(vec![Letter::XInv])),
            by_word(Slope::infinity(), Word(vec![Letter::YInv])),
        ],
    }
}
