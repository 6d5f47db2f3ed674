//! The hyperoctahedral group `H_n = Z_2^n x| S_n` as signed permutations.
//!
//! A [`SignedPerm`] `w` acts on the coordinate vectors `e_1..e_n` by
//! `w(e_i) = sign * e_j` and is stored as the list of signed images
//! `w(i) = sign * j`. Products compose right to left: `(a*b)(e_i) = a(b(e_i))`.
//! Generators: `s_i` (`i < n`) swaps `e_i` and `e_{i+1}`, `s_n` negates `e_n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_rank, Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 16;

/// An element `x` of `Z_2^n`; bit `i - 1` is set iff `x_i = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    n: usize,
    bits: u32,
}

impl SignVector {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        if n > MAX_RANK {
            return Err(Error::DomainError(format!("rank {n} exceeds {MAX_RANK}")));
        }
        if (bits as u64) >> n != 0 {
            return Err(Error::DomainError(format!("bitmask {bits:#b} too wide for rank {n}")));
        }
        Ok(SignVector { n, bits })
    }

    pub(crate) fn from_bits(n: usize, bits: usize) -> Self {
        debug_assert!(bits >> n == 0);
        SignVector { n, bits: bits as u32 }
    }

    /// `(1, ..., 1)`.
    pub fn ones(n: usize) -> Self {
        SignVector { n, bits: 0 }
    }

    /// `(-1, ..., -1)`.
    pub fn minus_ones(n: usize) -> Self {
        Self::from_bits(n, (1usize << n) - 1)
    }

    /// `x^j`: the single `-1` sits at position `j`.
    pub fn unit(n: usize, j: usize) -> Self {
        assert!((1..=n).contains(&j), "position {j} out of range 1..={n}");
        Self::from_bits(n, 1 << (j - 1))
    }

    /// `(1, ..., 1, -1, ..., -1)` with `d` trailing minus signs.
    pub fn trailing_minus(n: usize, d: usize) -> Self {
        assert!(d <= n);
        Self::from_bits(n, ((1usize << d) - 1) << (n - d))
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let mut bits = 0u32;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => bits |= 1 << i,
                _ => return Err(Error::DomainError(format!("sign entry {s} is not +-1"))),
            }
        }
        SignVector::new(signs.len(), bits)
    }

    /// All `2^n` elements in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        (0..1usize << n).map(move |b| SignVector::from_bits(n, b))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// `x_i` for `1 <= i <= n`.
    pub fn get(&self, i: usize) -> i8 {
        debug_assert!((1..=self.n).contains(&i));
        if self.bits >> (i - 1) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.get(i) == -1
    }

    /// Hamming weight `w(x)`, the number of `-1` entries.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Positions `i_1 < ... < i_w` of the `-1` entries.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| self.is_minus(i)).collect()
    }

    /// `m_j(y) = #{ l > j : y_l = 1 }`.
    pub fn m(&self, j: usize) -> usize {
        (j + 1..=self.n).filter(|&l| !self.is_minus(l)).count()
    }

    /// Pointwise product in `Z_2^n`.
    pub fn mul(&self, other: &SignVector) -> SignVector {
        SignVector {
            n: self.n,
            bits: self.bits ^ other.bits,
        }
    }

    /// `x * x^j`.
    pub fn flip(&self, j: usize) -> SignVector {
        SignVector {
            n: self.n,
            bits: self.bits ^ (1 << (j - 1)),
        }
    }

    /// `x^{s_i}`: entries `i` and `i+1` swapped.
    pub fn swap(&self, i: usize) -> SignVector {
        let (a, b) = (self.bits >> (i - 1) & 1, self.bits >> i & 1);
        if a == b {
            *self
        } else {
            self.flip(i).flip(i + 1)
        }
    }

    /// `x^sigma = (x_{sigma^{-1}(1)}, ..., x_{sigma^{-1}(n)})` for a positive permutation.
    pub fn permuted(&self, sigma: &SignedPerm) -> SignVector {
        let mut bits = 0u32;
        for i in 1..=self.n {
            if self.is_minus(i) {
                bits |= 1 << (sigma.image(i).unsigned_abs() as usize - 1);
            }
        }
        SignVector { n: self.n, bits }
    }

    /// The sign change as a group element.
    pub fn to_perm(&self) -> SignedPerm {
        SignedPerm {
            images: (1..=self.n as i8).map(|i| i * self.get(i as usize)).collect(),
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.is_minus(i) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Parse(format!("bad sign character {c:?} in {s:?}"))),
            })
            .collect::<Result<_>>()?;
        SignVector::from_signs(&signs)
    }
}

/// An element of `H_n`: entry `i - 1` of `images` is `w(i)` in `{+-1, ..., +-n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i8).collect(),
        }
    }

    /// The simple reflection `s_i`, `1 <= i <= n`.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if !(1..=n).contains(&i) {
            return Err(Error::DomainError(format!("generator index {i} outside 1..={n}")));
        }
        let mut w = Self::identity(n);
        if i < n {
            w.images.swap(i - 1, i);
        } else {
            w.images[n - 1] = -(n as i8);
        }
        Ok(w)
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::DomainError(format!("rank {n} exceeds {MAX_RANK}")));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::DomainError(format!("{images:?} is not a signed permutation")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm {
            images: images.into_iter().map(|v| v as i8).collect(),
        })
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.multiply(&Self::generator(i, n)?)?;
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Signed image `w(i)`.
    pub fn image(&self, i: usize) -> i32 {
        self.images[i - 1] as i32
    }

    pub fn images(&self) -> Vec<i32> {
        self.images.iter().map(|&v| v as i32).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Whether the element lies in `S_n` (no sign changes).
    pub fn is_positive(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    pub fn multiply(&self, rhs: &SignedPerm) -> Result<SignedPerm> {
        check_rank(self.n(), rhs.n())?;
        Ok(self.compose(rhs))
    }

    pub(crate) fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        SignedPerm {
            images: rhs
                .images
                .iter()
                .map(|&b| b.signum() * self.images[b.unsigned_abs() as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut images = vec![0i8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v.unsigned_abs() as usize - 1] = v.signum() * (i as i8 + 1);
        }
        SignedPerm { images }
    }

    /// Number of positive roots `e_i`, `e_i - e_j`, `e_i + e_j` (`i < j`)
    /// sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.n();
        // w(e_i) = s e_t has sign s at index t; a root a e_i + b e_j maps to
        // a vector whose first nonzero coordinate decides positivity.
        let img = |i: usize| {
            let v = self.images[i];
            (v.unsigned_abs() as usize, v.signum() as i32)
        };
        let mut count = 0;
        for i in 0..n {
            let (ti, si) = img(i);
            if si < 0 {
                count += 1;
            }
            for j in i + 1..n {
                let (tj, sj) = img(j);
                // e_i - e_j -> si e_ti - sj e_tj
                let minus_neg = if ti < tj { si < 0 } else { -sj < 0 };
                // e_i + e_j -> si e_ti + sj e_tj
                let plus_neg = if ti < tj { si < 0 } else { sj < 0 };
                count += minus_neg as usize + plus_neg as usize;
            }
        }
        count
    }

    /// Whether `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i)` is negative.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        let n = self.n();
        if i == n {
            return inv.images[n - 1] < 0;
        }
        let (a, b) = (inv.images[i - 1], inv.images[i]);
        // w^{-1}(e_i - e_{i+1}) = sa e_ta - sb e_tb
        let (ta, tb) = (a.unsigned_abs(), b.unsigned_abs());
        if ta < tb {
            a < 0
        } else {
            b > 0
        }
    }

    /// Whether `l(w s_i) < l(w)`, i.e. `w(alpha_i)` is negative.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.inverse().has_left_descent(i)
    }

    /// Reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`, always
    /// peeling off the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let i = (1..=n)
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity element has a descent");
            word.push(i);
            w = SignedPerm::generator(i, n).unwrap().compose(&w);
        }
        word
    }

    /// The `x` with `w` in the coset `x S_n`.
    pub fn coset(&self) -> SignVector {
        let mut bits = 0u32;
        for &v in &self.images {
            if v < 0 {
                bits |= 1 << (v.unsigned_abs() - 1);
            }
        }
        SignVector { n: self.n(), bits }
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] in {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(SignedPerm { images: Vec::new() });
        }
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::from_images(images)
    }
}

/// `u_x = x sigma_x`, the minimal-length representative of the coset `x S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub x: SignVector,
    pub u_x: SignedPerm,
    pub sigma_x: SignedPerm,
    pub len_x: usize,
    pub len_u: usize,
    pub len_sigma: usize,
}

/// Build `sigma` greedily (largest free value for `-1` entries, smallest for
/// `+1` entries), set `sigma_x = sigma^{-1}` and `u_x = x sigma_x`.
pub fn coset_rep(x: SignVector) -> CosetDecomposition {
    let n = x.n();
    let (mut hi, mut lo) = (n as i8, 1i8);
    let mut sigma = vec![0i8; n];
    for i in 1..=n {
        if x.is_minus(i) {
            sigma[i - 1] = hi;
            hi -= 1;
        } else {
            sigma[i - 1] = lo;
            lo += 1;
        }
    }
    let sigma_x = SignedPerm { images: sigma }.inverse();
    let u_x = x.to_perm().compose(&sigma_x);
    let w = x.weight();
    let sum: usize = x.positions().iter().sum();
    CosetDecomposition {
        x,
        len_x: (1 + 2 * n) * w - 2 * sum,
        len_u: (1 + n) * w - sum,
        len_sigma: n * w - sum,
        u_x,
        sigma_x,
    }
}

/// Outcome of `s_i u_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetMove {
    /// `s_i u_x = u_y`.
    Rep(SignVector),
    /// `s_i u_x = u_x s_j`.
    RightGenerator(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenCosetAction {
    /// Whether `l(s_i u_x) = l(u_x) + 1`.
    pub ascent: bool,
    pub result: CosetMove,
}

/// Classify `s_i u_x` into the three possible cases.
pub fn gen_times_coset_rep(i: usize, x: SignVector) -> Result<GenCosetAction> {
    let n = x.n();
    if !(1..=n).contains(&i) {
        return Err(Error::DomainError(format!("generator index {i} outside 1..={n}")));
    }
    if i == n {
        return Ok(GenCosetAction {
            ascent: !x.is_minus(n),
            result: CosetMove::Rep(x.flip(n)),
        });
    }
    let (a, b) = (x.get(i), x.get(i + 1));
    if a != b {
        return Ok(GenCosetAction {
            ascent: a > b,
            result: CosetMove::Rep(x.swap(i)),
        });
    }
    let sigma_inv = coset_rep(x).sigma_x.inverse();
    let j = sigma_inv.image(i).min(sigma_inv.image(i + 1)) as usize;
    Ok(GenCosetAction {
        ascent: true,
        result: CosetMove::RightGenerator(j),
    })
}

/// All `n!` elements of `S_n` in lexicographic order of one-line notation.
pub fn permutations(n: usize) -> Vec<SignedPerm> {
    let mut out = Vec::new();
    let mut cur: Vec<i8> = (1..=n as i8).collect();
    loop {
        out.push(SignedPerm { images: cur.clone() });
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            break;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

/// All `2^n n!` elements of `H_n`.
pub fn group_elements(n: usize) -> Vec<SignedPerm> {
    let perms = permutations(n);
    SignVector::all(n)
        .flat_map(|x| {
            let xp = x.to_perm();
            perms.iter().map(move |s| xp.compose(s)).collect::<Vec<_>>()
        })
        .collect()
}
