//! Reduced rational slopes, the Farey neighbor relation, continued
//! fractions, and the dictionary between Farey pairs and SL₂⁺(ℤ).
//!
//! A slope `p/q` is the direction `(q, p)`; the degenerate slopes are
//! `0 = 0/1` (horizontal) and `∞ = 1/0` (vertical, ordered greatest).
//! All comparisons are exact cross-multiplications — no floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A reduced rational slope `p/q`, including `0/1` and `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: u64,
    q: u64,
}

impl Slope {
    pub fn new(p: u64, q: u64) -> Result<Self, Error> {
        if p == 0 && q == 0 {
            return Err(Error::Parse("slope 0/0 is not allowed".into()));
        }
        let g = gcd(p, q);
        Ok(Slope { p: p / g, q: q / g })
    }

    pub const fn zero() -> Self {
        Slope { p: 0, q: 1 }
    }

    pub const fn infinity() -> Self {
        Slope { p: 1, q: 0 }
    }

    pub const fn one() -> Self {
        Slope { p: 1, q: 1 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The direction vector `(q, p)`.
    pub fn direction(&self) -> (u64, u64) {
        (self.q, self.p)
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0
    }

    pub fn is_infinity(&self) -> bool {
        self.q == 0
    }

    pub fn is_one(&self) -> bool {
        self.p == 1 && self.q == 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.is_zero() || self.is_infinity()
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        // p1/q1 < p2/q2 iff p1*q2 < p2*q1; sound for 1/0 as well.
        let lhs = (self.p as u128) * (other.q as u128);
        let rhs = (other.p as u128) * (self.q as u128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `p/q`, a bare integer `p`, or `inf` for `1/0`.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(Slope::infinity());
        }
        if let Some((ps, qs)) = t.split_once('/') {
            let p: u64 = ps
                .trim()
                .parse()
                .map_err(|_| Error::parse_at(s, 0, "bad numerator"))?;
            let q: u64 = qs
                .trim()
                .parse()
                .map_err(|_| Error::parse_at(s, ps.len() + 1, "bad denominator"))?;
            Slope::new(p, q)
        } else {
            let p: u64 = t
                .parse()
                .map_err(|_| Error::parse_at(s, 0, "bad slope"))?;
            Slope::new(p, 1)
        }
    }
}

/// `r1 <ₙ r2`: `r1 < r2` and `p2·q1 − p1·q2 = 1`.
pub fn is_neighbor(r1: Slope, r2: Slope) -> bool {
    if r1 >= r2 {
        return false;
    }
    (r2.p as i128) * (r1.q as i128) - (r1.p as i128) * (r2.q as i128) == 1
}

/// The mediant `(p1+p2)/(q1+q2)` of a Farey pair. The mediant of a Farey
/// pair is already reduced, and is a neighbor of both parents.
pub fn farey_add(r1: Slope, r2: Slope) -> Result<Slope, Error> {
    if !is_neighbor(r1, r2) {
        return Err(Error::NotNeighbors(r1.to_string(), r2.to_string()));
    }
    let m = Slope {
        p: r1.p + r2.p,
        q: r1.q + r2.q,
    };
    debug_assert_eq!(gcd(m.p, m.q), 1);
    Ok(m)
}

/// Continued fraction `[a1,...,ak]` of a slope in `(0, 1]`, with value
/// `1/(a1 + 1/(a2 + ...))`. Normalized so that `ak > 1` unless `k = 1`;
/// the slope `1/1` is `[1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CFrac {
    terms: Vec<u64>,
}

impl CFrac {
    pub fn new(terms: Vec<u64>) -> Result<Self, Error> {
        if terms.is_empty() || terms.iter().any(|&a| a == 0) {
            return Err(Error::Parse("continued-fraction terms must be positive".into()));
        }
        if terms.len() > 1 && *terms.last().unwrap() == 1 {
            return Err(Error::Parse("last term must exceed 1 (normalize first)".into()));
        }
        let c = CFrac { terms };
        if c.value() > Slope::one() {
            return Err(Error::Parse("continued fraction exceeds 1".into()));
        }
        Ok(c)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Number of terms; always at least 1.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn value(&self) -> Slope {
        eval_terms(&self.terms)
    }

    /// Terms with another entry appended; the result is evaluated with
    /// `eval_terms`, so it need not be in normalized form.
    pub fn extended(&self, t: u64) -> Vec<u64> {
        let mut v = self.terms.clone();
        v.push(t);
        v
    }

    /// Terms with the last entry dropped (may be empty, meaning `0/1`).
    pub fn parent(&self) -> Vec<u64> {
        self.terms[..self.terms.len() - 1].to_vec()
    }
}

impl fmt::Display for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluates an arbitrary (possibly non-normalized, possibly empty) term
/// list: the empty list is `0/1`, and a trailing 0 in a singleton gives
/// `1/0`. Folds from the right over exact integers.
pub fn eval_terms(terms: &[u64]) -> Slope {
    // value = 1/(t1 + 1/(t2 + ... )); track the inner value as num/den.
    let mut num: u64 = 1;
    let mut den: u64 = 0;
    for &t in terms.iter().rev() {
        // inner := t + 1/inner  (num/den := (t*num + den)/num)
        let new_num = t * num + den;
        den = num;
        num = new_num;
    }
    // value = 1/inner = den/num
    Slope { p: den, q: num }
}

/// Continued fraction of a slope in `(0, 1]`.
pub fn cfrac(r: Slope) -> Result<CFrac, Error> {
    if r.is_degenerate() || r > Slope::one() {
        return Err(Error::NoContinuedFraction(r.to_string()));
    }
    // Euclid on q/p; the final quotient is >= 2 except for 1/1 -> [1].
    let mut num = r.q;
    let mut den = r.p;
    let mut terms = Vec::new();
    while den > 0 {
        terms.push(num / den);
        let rem = num % den;
        num = den;
        den = rem;
    }
    debug_assert_eq!(eval_terms(&terms), r);
    CFrac::new(terms)
}

/// The two Farey neighbors of `r = [a1,...,ak]`:
/// `r' = [a1,...,ak − 1]` and `r'' = [a1,...,a_{k−1}]`.
///
/// Orientation: `k` even ⇒ `r' <ₙ r <ₙ r''` and `r = r' ⊕ r''`;
/// `k` odd ⇒ `r'' <ₙ r <ₙ r'` and `r = r'' ⊕ r'`.
pub fn cf_neighbors(c: &CFrac) -> (Slope, Slope) {
    let mut dec = c.terms.clone();
    *dec.last_mut().unwrap() -= 1;
    let r_prime = eval_terms(&dec);
    let r_dprime = eval_terms(&c.terms[..c.terms.len() - 1]);
    (r_prime, r_dprime)
}

/// A matrix in SL₂⁺(ℤ): nonnegative entries, determinant 1. The fields are
/// the columns `(a, b)` and `(c, d)`, whose slopes `b/a <ₙ d/c` form a
/// Farey pair — this is the bijection between SL₂⁺(ℤ) and Farey pairs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PosMatrix {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl PosMatrix {
    pub fn new(a: u64, b: u64, c: u64, d: u64) -> Result<Self, Error> {
        let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
        if det != 1 {
            return Err(Error::BadDeterminant(det as i64));
        }
        Ok(PosMatrix { a, b, c, d })
    }

    pub const fn identity() -> Self {
        PosMatrix { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `L = [[1,1],[0,1]]`.
    pub const fn l() -> Self {
        PosMatrix { a: 1, b: 0, c: 1, d: 1 }
    }

    /// `R = [[1,0],[1,1]]`.
    pub const fn r() -> Self {
        PosMatrix { a: 1, b: 1, c: 0, d: 1 }
    }

    pub fn mul(&self, other: &PosMatrix) -> PosMatrix {
        PosMatrix {
            a: self.a * other.a + self.c * other.b,
            b: self.b * other.a + self.d * other.b,
            c: self.a * other.c + self.c * other.d,
            d: self.b * other.c + self.d * other.d,
        }
    }

    /// The slopes of the two columns, `(b/a, d/c)`.
    pub fn column_slopes(&self) -> (Slope, Slope) {
        // det = 1 forces each column to be a coprime, nonzero pair.
        (
            Slope { p: self.b, q: self.a },
            Slope { p: self.d, q: self.c },
        )
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix {
            a: self.a as i64,
            b: self.b as i64,
            c: self.c as i64,
            d: self.d as i64,
        }
    }
}

impl fmt::Display for PosMatrix {
    /// Row-major text form `a,c;b,d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.c, self.b, self.d)
    }
}

impl fmt::Debug for PosMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.c, self.b, self.d)
    }
}

impl FromStr for PosMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let m: IntMatrix = s.parse()?;
        if m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0 {
            return Err(Error::NegativeEntry);
        }
        PosMatrix::new(m.a as u64, m.b as u64, m.c as u64, m.d as u64)
    }
}

/// The matrix `[[q1,q2],[p1,p2]]` of a Farey pair.
pub fn matrix_from_pair(r1: Slope, r2: Slope) -> Result<PosMatrix, Error> {
    if !is_neighbor(r1, r2) {
        return Err(Error::NotNeighbors(r1.to_string(), r2.to_string()));
    }
    Ok(PosMatrix {
        a: r1.q,
        b: r1.p,
        c: r2.q,
        d: r2.p,
    })
}

/// Inverse of [`matrix_from_pair`].
pub fn pair_from_matrix(m: &PosMatrix) -> (Slope, Slope) {
    m.column_slopes()
}

/// A letter of the positive generating set of SL₂⁺(ℤ).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lr {
    L,
    R,
}

/// Writes `A` as a positive word in `L` and `R` by reverse Euclidean
/// peeling: at each step exactly one of the columns dominates the other,
/// which determines the last letter. The identity gives the empty word.
pub fn positive_word(m: &PosMatrix) -> Vec<Lr> {
    let mut cur = *m;
    let mut rev = Vec::new();
    while cur != PosMatrix::identity() {
        if cur.c >= cur.a && cur.d >= cur.b {
            // A = A' · L with A' = A · L⁻¹: col2 -= col1
            rev.push(Lr::L);
            cur = PosMatrix {
                a: cur.a,
                b: cur.b,
                c: cur.c - cur.a,
                d: cur.d - cur.b,
            };
        } else {
            debug_assert!(cur.a >= cur.c && cur.b >= cur.d);
            rev.push(Lr::R);
            cur = PosMatrix {
                a: cur.a - cur.c,
                b: cur.b - cur.d,
                c: cur.c,
                d: cur.d,
            };
        }
    }
    rev.reverse();
    rev
}

pub fn eval_lr(word: &[Lr]) -> PosMatrix {
    word.iter().fold(PosMatrix::identity(), |acc, &g| match g {
        Lr::L => acc.mul(&PosMatrix::l()),
        Lr::R => acc.mul(&PosMatrix::r()),
    })
}

/// An element of SL₂(ℤ). Fields are the columns `(a, b)` and `(c, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, Error> {
        let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
        if det != 1 {
            return Err(Error::BadDeterminant(det.clamp(i64::MIN as i128, i64::MAX as i128) as i64));
        }
        Ok(IntMatrix { a, b, c, d })
    }

    pub const fn identity() -> Self {
        IntMatrix { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix {
            a: self.a * other.a + self.c * other.b,
            b: self.b * other.a + self.d * other.b,
            c: self.a * other.c + self.c * other.d,
            d: self.b * other.c + self.d * other.d,
        }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    /// Clockwise quarter rotation `[[0,1],[-1,0]]`; equals `L·R⁻¹·L`.
    pub const fn rot_cw() -> Self {
        IntMatrix { a: 0, b: -1, c: 1, d: 0 }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.c >= 0 && self.d >= 0
    }

    pub fn to_pos(&self) -> Option<PosMatrix> {
        if self.is_nonnegative() {
            Some(PosMatrix {
                a: self.a as u64,
                b: self.b as u64,
                c: self.c as u64,
                d: self.d as u64,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.c, self.b, self.d)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.c, self.b, self.d)
    }
}

/// Row-major text form `a,c;b,d`, e.g. `1,2;0,1` or `0,-1;1,0`.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let rows: Vec<&str> = s.trim().split(';').collect();
        if rows.len() != 2 {
            return Err(Error::parse_at(s, 0, "expected two rows separated by ';'"));
        }
        let mut entries = [0i64; 4];
        let mut k = 0;
        for row in &rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::parse_at(s, 0, "expected two entries per row"));
            }
            for col in cols {
                entries[k] = col
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse_at(s, 0, "bad matrix entry"))?;
                k += 1;
            }
        }
        // rows are (a, c) and (b, d)
        IntMatrix::new(entries[0], entries[2], entries[1], entries[3])
    }
}

/// A letter of the generating set `{L, L⁻¹, R, R⁻¹}` of SL₂(ℤ).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    L,
    LInv,
    R,
    RInv,
}

pub fn eval_gen(word: &[Gen]) -> IntMatrix {
    let l = IntMatrix { a: 1, b: 0, c: 1, d: 1 };
    let linv = IntMatrix { a: 1, b: 0, c: -1, d: 1 };
    let r = IntMatrix { a: 1, b: 1, c: 0, d: 1 };
    let rinv = IntMatrix { a: 1, b: -1, c: 0, d: 1 };
    word.iter().fold(IntMatrix::identity(), |acc, &g| {
        acc.mul(match g {
            Gen::L => &l,
            Gen::LInv => &linv,
            Gen::R => &r,
            Gen::RInv => &rinv,
        })
    })
}

fn push_pow(word: &mut Vec<Gen>, plus: Gen, minus: Gen, k: i64) {
    let letter = if k >= 0 { plus } else { minus };
    for _ in 0..k.unsigned_abs() {
        word.push(letter);
    }
}

/// Decomposes any `B ∈ SL₂(ℤ)` into a word over `{L, L⁻¹, R, R⁻¹}` with
/// `eval_gen(word) == B`, by the Euclidean algorithm on the first column;
/// the torsion factor `[[0,1],[-1,0]] = L·R⁻¹·L` absorbs signs.
pub fn sl2z_word(m: &IntMatrix) -> Vec<Gen> {
    let mut word = Vec::new();
    let mut cur = *m;
    // Euclid on the first column (a, b). Peeling a left factor g appends its
    // letters and replaces cur by g⁻¹·cur, so the word multiplies out to m.
    while cur.b != 0 {
        if cur.a != 0 {
            // L^{-q}·B: row1 ← row1 − q·row2, i.e. a ← a mod b.
            let q = cur.a.div_euclid(cur.b);
            if q != 0 {
                push_pow(&mut word, Gen::L, Gen::LInv, q);
                cur.a -= q * cur.b;
                cur.c -= q * cur.d;
            }
        }
        if cur.a == 0 {
            // det forces the column to be (0, ±1); peel J = L·R⁻¹·L.
            word.extend([Gen::L, Gen::RInv, Gen::L]);
            // J⁻¹·B: rows (r1, r2) ← (−r2, r1).
            cur = IntMatrix {
                a: -cur.b,
                b: cur.a,
                c: -cur.d,
                d: cur.c,
            };
            continue;
        }
        // R^{-q}·B: row2 ← row2 − q·row1, i.e. b ← b mod a.
        let q = cur.b.div_euclid(cur.a);
        if q != 0 {
            push_pow(&mut word, Gen::R, Gen::RInv, q);
            cur.b -= q * cur.a;
            cur.d -= q * cur.c;
        }
    }
    // First column is (±1, 0); the determinant forces d = a.
    if cur.a == -1 {
        // −I = (L·R⁻¹·L)²
        word.extend([Gen::L, Gen::RInv, Gen::L, Gen::L, Gen::RInv, Gen::L]);
        cur = cur.neg();
    }
    debug_assert_eq!((cur.a, cur.b, cur.d), (1, 0, 1));
    push_pow(&mut word, Gen::L, Gen::LInv, cur.c);
    debug_assert_eq!(eval_gen(&word), *m);
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn slope_parse_and_order() {
        assert_eq!(s("2/5"), Slope::new(2, 5).unwrap());
        assert_eq!(s("4/10"), s("2/5"));
        assert_eq!(s("inf"), Slope::infinity());
        assert_eq!(s("3"), Slope::new(3, 1).unwrap());
        assert!(Slope::new(0, 0).is_err());
        assert!(s("0/1") < s("1/3"));
        assert!(s("1/3") < s("2/5"));
        assert!(s("5/2") < Slope::infinity());
        assert_eq!(s("2/5").to_string(), "2/5");
    }

    #[test]
    fn neighbor_examples() {
        assert!(is_neighbor(Slope::zero(), Slope::infinity()));
        assert!(is_neighbor(s("1/3"), s("2/5")));
        assert!(!is_neighbor(s("1/3"), s("3/5")));
        assert!(!is_neighbor(s("2/5"), s("1/3")));
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(farey_add(Slope::zero(), s("1/2")).unwrap(), s("1/3"));
        assert_eq!(farey_add(Slope::one(), Slope::infinity()).unwrap(), s("2/1"));
        assert_eq!(farey_add(s("1/3"), s("2/5")).unwrap(), s("3/8"));
        assert!(farey_add(s("1/3"), s("3/5")).is_err());
    }

    #[test]
    fn mediant_is_neighbor_of_both_parents() {
        // exhaustive over the Stern-Brocot tree; bounding the denominator
        // sum alone never terminates on the slopes above 1, so both
        // coordinate sums are capped
        fn walk(r1: Slope, r2: Slope, checks: &mut u64) {
            if r1.q() + r2.q() > 50 || r1.p() + r2.p() > 50 {
                return;
            }
            let m = farey_add(r1, r2).unwrap();
            assert_eq!(super::gcd(m.p(), m.q()), 1);
            assert!(is_neighbor(r1, m) && is_neighbor(m, r2));
            *checks += 1;
            walk(r1, m, checks);
            walk(m, r2, checks);
        }
        let mut checks = 0;
        walk(Slope::zero(), Slope::infinity(), &mut checks);
        assert!(checks > 100);
    }

    #[test]
    fn cfrac_examples() {
        assert_eq!(cfrac(s("2/5")).unwrap().terms(), &[2, 2]);
        assert_eq!(cfrac(Slope::one()).unwrap().terms(), &[1]);
        assert_eq!(cfrac(s("1/3")).unwrap().terms(), &[3]);
        assert!(cfrac(Slope::zero()).is_err());
        assert!(cfrac(Slope::infinity()).is_err());
        assert!(cfrac(s("5/2")).is_err());
    }

    #[test]
    fn cf_neighbor_examples() {
        // 2/5 = [2,2], k even: 1/3 <n 2/5 <n 1/2
        let c = cfrac(s("2/5")).unwrap();
        let (rp, rpp) = cf_neighbors(&c);
        assert_eq!((rp, rpp), (s("1/3"), s("1/2")));
        assert_eq!(farey_add(rp, rpp).unwrap(), s("2/5"));

        // 1/3 = [3], k odd: r' = 1/2, r'' = 0/1, 1/3 = 0/1 ⊕ 1/2
        let c = cfrac(s("1/3")).unwrap();
        let (rp, rpp) = cf_neighbors(&c);
        assert_eq!((rp, rpp), (s("1/2"), Slope::zero()));
        assert_eq!(farey_add(rpp, rp).unwrap(), s("1/3"));

        // 1/1 = [1], k odd: r' = 1/0, r'' = 0/1
        let c = cfrac(Slope::one()).unwrap();
        let (rp, rpp) = cf_neighbors(&c);
        assert_eq!((rp, rpp), (Slope::infinity(), Slope::zero()));
    }

    #[test]
    fn cf_neighbors_consistent_for_all_small_slopes() {
        for q in 1..=60u64 {
            for p in 1..=q {
                if super::gcd(p, q) != 1 {
                    continue;
                }
                let r = Slope::new(p, q).unwrap();
                let c = cfrac(r).unwrap();
                let (rp, rpp) = cf_neighbors(&c);
                if c.len() % 2 == 0 {
                    assert!(is_neighbor(rp, rpp));
                    assert_eq!(farey_add(rp, rpp).unwrap(), r);
                } else {
                    assert!(is_neighbor(rpp, rp));
                    assert_eq!(farey_add(rpp, rp).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn matrix_pair_bijection() {
        assert_eq!(
            matrix_from_pair(Slope::zero(), Slope::infinity()).unwrap(),
            PosMatrix::identity()
        );
        assert_eq!(
            matrix_from_pair(Slope::one(), Slope::infinity()).unwrap(),
            PosMatrix::r()
        );
        assert_eq!(
            matrix_from_pair(s("1/3"), s("1/2")).unwrap(),
            PosMatrix::new(3, 1, 2, 1).unwrap()
        );
        let m = matrix_from_pair(s("1/3"), s("1/2")).unwrap();
        assert_eq!(pair_from_matrix(&m), (s("1/3"), s("1/2")));
    }

    #[test]
    fn positive_word_examples() {
        assert!(positive_word(&PosMatrix::identity()).is_empty());
        assert_eq!(positive_word(&PosMatrix::l()), vec![Lr::L]);
        // [[2,1],[1,1]] = L·R
        let m = PosMatrix::new(2, 1, 1, 1).unwrap();
        assert_eq!(positive_word(&m), vec![Lr::L, Lr::R]);
        assert_eq!(eval_lr(&positive_word(&m)), m);
    }

    #[test]
    fn matrix_text_roundtrip() {
        let m: IntMatrix = "1,2;0,1".parse().unwrap();
        assert_eq!(m, IntMatrix::new(1, 0, 2, 1).unwrap());
        assert_eq!(m.to_string(), "1,2;0,1");
        let j: IntMatrix = "0,1;-1,0".parse().unwrap();
        assert_eq!(j, IntMatrix::rot_cw());
        assert!("1,1;1,1".parse::<IntMatrix>().is_err());
        assert!("0,-1;1,0".parse::<PosMatrix>().is_err());
    }

    #[test]
    fn rot_cw_is_lrinvl() {
        assert_eq!(eval_gen(&[Gen::L, Gen::RInv, Gen::L]), IntMatrix::rot_cw());
        let minus_i = IntMatrix::rot_cw().mul(&IntMatrix::rot_cw());
        assert_eq!(minus_i, IntMatrix::identity().neg());
    }

    #[test]
    fn sl2z_word_examples() {
        let linv = IntMatrix::new(1, 0, -1, 1).unwrap();
        assert_eq!(sl2z_word(&linv), vec![Gen::LInv]);
        assert_eq!(sl2z_word(&IntMatrix::identity()), vec![]);
        for m in [
            IntMatrix::new(0, 1, -1, 0).unwrap(),
            IntMatrix::rot_cw(),
            IntMatrix::identity().neg(),
            IntMatrix::new(17, 4, 21, 5).unwrap(),
            IntMatrix::new(-3, -2, -7, -5).unwrap(),
            IntMatrix::new(2, -5, 1, -2).unwrap(),
        ] {
            assert_eq!(eval_gen(&sl2z_word(&m)), m);
        }
    }
}
