//! Surjection words: quasi-shuffles, shuffles, increasing surjections,
//! admissible pairs and the fiber factorial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactlin::{Basis, LinComb, Rational};

/// A surjective map `[k] ↠ [p]` written as the word `σ(1) … σ(k)`.
///
/// Ordered lexicographically by word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Surjection {
    word: Vec<usize>,
    max: usize,
}

impl Surjection {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let max = word.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; max + 1];
        for &v in &word {
            if v == 0 {
                return Err(Error::malformed("surjection values start at 1"));
            }
            seen[v] = true;
        }
        if let Some(missing) = (1..=max).find(|&v| !seen[v]) {
            return Err(Error::malformed(format!(
                "word {word:?} misses the value {missing}"
            )));
        }
        Ok(Self { word, max })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            word: (1..=k).collect(),
            max: k,
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Length of the source, `k`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Size of the target, `p = max σ`.
    pub fn target(&self) -> usize {
        self.max
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max];
        for &v in &self.word {
            sizes[v - 1] += 1;
        }
        sizes
    }

    /// `σ! = Π |σ⁻¹(i)|!`.
    pub fn factorial(&self) -> BigInt {
        self.fiber_sizes()
            .into_iter()
            .flat_map(|s| 1..=s)
            .map(BigInt::from)
            .product()
    }

    /// `self ∘ inner`; requires `inner.max() == self.len()`.
    pub fn after(&self, inner: &Surjection) -> Surjection {
        assert_eq!(inner.max, self.word.len(), "maps are not composable");
        Surjection {
            word: inner.word.iter().map(|&v| self.word[v - 1]).collect(),
            max: self.max,
        }
    }

    /// `σ ⊗ τ`: the word of `σ` followed by that of `τ` shifted by `max σ`.
    pub fn tensor(&self, other: &Surjection) -> Surjection {
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + self.max));
        Surjection {
            word,
            max: self.max + other.max,
        }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.word.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Basis for Surjection {
    fn fmt_basis(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Surjection {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(s)
    }
}

/// A pair `(σ′, σ″)` of surjections on `[k]` with `σ′` weakly increasing and
/// `σ″` strictly increasing on each fiber of `σ′`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AdmPair {
    pub first: Surjection,
    pub second: Surjection,
}

impl AdmPair {
    pub fn is_admissible(first: &Surjection, second: &Surjection) -> bool {
        let k = first.len();
        if second.len() != k || !first.is_weakly_increasing() {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| first.word[i] != first.word[j] || second.word[i] < second.word[j])
        })
    }
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

fn cached<K, V>(cache: &'static Cache<K, V>, key: K, build: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq,
{
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Arc::clone(v);
    }
    let v = Arc::new(build());
    Arc::clone(map.lock().unwrap().entry(key).or_insert(v))
}

/// All `(k,l)`-quasi-shuffles in lexicographic order.
pub fn enumerate_qsh(k: usize, l: usize) -> Vec<Surjection> {
    qsh_cached(k, l).as_ref().clone()
}

pub(crate) fn qsh_cached(k: usize, l: usize) -> Arc<Vec<Surjection>> {
    static CACHE: Cache<(usize, usize), Vec<Surjection>> = OnceLock::new();
    cached(&CACHE, (k, l), || build_qsh(k, l, false))
}

/// All `(k,l)`-shuffles (injective quasi-shuffles) in lexicographic order.
pub fn enumerate_sh(k: usize, l: usize) -> Vec<Surjection> {
    sh_cached(k, l).as_ref().clone()
}

pub(crate) fn sh_cached(k: usize, l: usize) -> Arc<Vec<Surjection>> {
    static CACHE: Cache<(usize, usize), Vec<Surjection>> = OnceLock::new();
    cached(&CACHE, (k, l), || build_qsh(k, l, true))
}

// A quasi-shuffle is determined by its two images A = σ([k]) and
// B = σ(k+[l]), with |A| = k, |B| = l and A ∪ B = [n].
fn build_qsh(k: usize, l: usize, injective: bool) -> Vec<Surjection> {
    let mut out = Vec::new();
    let lo = if injective { k + l } else { k.max(l) };
    for n in lo..=k + l {
        // Each value of [n] goes to A only, B only, or both.
        let mut a = Vec::with_capacity(k);
        let mut b = Vec::with_capacity(l);
        fill_images(1, n, k, l, &mut a, &mut b, &mut out);
    }
    out.sort();
    out
}

fn fill_images(
    v: usize,
    n: usize,
    k: usize,
    l: usize,
    a: &mut Vec<usize>,
    b: &mut Vec<usize>,
    out: &mut Vec<Surjection>,
) {
    if v > n {
        if a.len() == k && b.len() == l {
            let mut word = a.clone();
            word.extend_from_slice(b);
            out.push(Surjection { word, max: n });
        }
        return;
    }
    let remaining = n - v + 1;
    if a.len() + remaining < k || b.len() + remaining < l {
        return;
    }
    for (in_a, in_b) in [(true, false), (false, true), (true, true)] {
        if (in_a && a.len() == k) || (in_b && b.len() == l) {
            continue;
        }
        if in_a {
            a.push(v);
        }
        if in_b {
            b.push(v);
        }
        fill_images(v + 1, n, k, l, a, b, out);
        if in_a {
            a.pop();
        }
        if in_b {
            b.pop();
        }
    }
}

/// All weakly increasing surjections from `[k]`, in lexicographic order.
/// `inc(0)` is the empty word.
pub fn enumerate_inc(k: usize) -> Vec<Surjection> {
    inc_cached(k).as_ref().clone()
}

pub(crate) fn inc_cached(k: usize) -> Arc<Vec<Surjection>> {
    static CACHE: Cache<usize, Vec<Surjection>> = OnceLock::new();
    cached(&CACHE, k, || {
        if k == 0 {
            return vec![Surjection::default()];
        }
        // Bit i of the mask says whether the value steps up after position i.
        let mut out: Vec<Surjection> = (0u64..1 << (k - 1))
            .map(|mask| {
                let mut word = Vec::with_capacity(k);
                let mut v = 1;
                word.push(v);
                for i in 0..k - 1 {
                    if mask >> i & 1 == 1 {
                        v += 1;
                    }
                    word.push(v);
                }
                Surjection { word, max: v }
            })
            .collect();
        out.sort();
        out
    })
}

/// All admissible pairs on `[k]`, sorted. `Adm(0)` is the pair of empty words.
pub fn enumerate_adm(k: usize) -> Vec<AdmPair> {
    adm_cached(k).as_ref().clone()
}

pub(crate) fn adm_cached(k: usize) -> Arc<Vec<AdmPair>> {
    static CACHE: Cache<usize, Vec<AdmPair>> = OnceLock::new();
    cached(&CACHE, k, || {
        let mut out = Vec::new();
        for first in inc_cached(k).iter() {
            let mut word = Vec::with_capacity(k);
            let mut used = vec![0usize; k + 1];
            adm_second(first, &mut word, &mut used, &mut out);
        }
        out.sort();
        out
    })
}

fn adm_second(
    first: &Surjection,
    word: &mut Vec<usize>,
    used: &mut [usize],
    out: &mut Vec<AdmPair>,
) {
    let k = first.len();
    let i = word.len();
    if i == k {
        let max = word.iter().copied().max().unwrap_or(0);
        if (1..=max).all(|v| used[v] > 0) {
            out.push(AdmPair {
                first: first.clone(),
                second: Surjection {
                    word: word.clone(),
                    max,
                },
            });
        }
        return;
    }
    // Within a fiber of the weakly increasing first map, positions are
    // contiguous, so strictness only involves the previous position.
    let lower = if i > 0 && first.word[i - 1] == first.word[i] {
        word[i - 1] + 1
    } else {
        1
    };
    for v in lower..=k {
        word.push(v);
        used[v] += 1;
        adm_second(first, word, used, out);
        used[v] -= 1;
        word.pop();
    }
}

/// `σ!`, the product of the factorials of the fiber sizes.
pub fn surj_factorial(sigma: &Surjection) -> BigInt {
    sigma.factorial()
}

/// Both sides of
/// `Σ τ∘(σ′⊗σ″)/(σ′!σ″!)` over `σ′∈inc(k), σ″∈inc(l), τ∈qsh(max σ′, max σ″)` and
/// `Σ τ∘σ/τ!` over `σ∈sh(k,l), τ∈inc(k+l)`.
pub fn hoffman_sides(k: usize, l: usize) -> (LinComb<Surjection>, LinComb<Surjection>) {
    let mut lhs = LinComb::zero();
    for s1 in inc_cached(k).iter() {
        for s2 in inc_cached(l).iter() {
            let inner = s1.tensor(s2);
            let c = Rational::new(BigInt::from(1), s1.factorial() * s2.factorial());
            for tau in qsh_cached(s1.target(), s2.target()).iter() {
                lhs.add_term(tau.after(&inner), c.clone());
            }
        }
    }
    let mut rhs = LinComb::zero();
    for sigma in sh_cached(k, l).iter() {
        for tau in inc_cached(k + l).iter() {
            let c = Rational::new(BigInt::from(1), tau.factorial());
            rhs.add_term(tau.after(sigma), c);
        }
    }
    (lhs, rhs)
}

pub fn check_hoffman_identity(k: usize, l: usize) -> bool {
    let (lhs, rhs) = hoffman_sides(k, l);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn words(v: &[Surjection]) -> Vec<String> {
        v.iter()
            .map(|s| s.word().iter().map(|d| d.to_string()).collect())
            .collect()
    }

    fn s(word: &[usize]) -> Surjection {
        Surjection::new(word.to_vec()).unwrap()
    }

    #[test]
    fn qsh_examples() {
        assert_eq!(words(&enumerate_qsh(1, 1)), ["11", "12", "21"]);
        assert_eq!(
            words(&enumerate_qsh(2, 1)),
            ["121", "122", "123", "132", "231"]
        );
        assert_eq!(
            words(&enumerate_qsh(2, 2)),
            [
                "1212", "1213", "1223", "1234", "1312", "1323", "1324", "1423", "2312", "2313",
                "2314", "2413", "3412"
            ]
        );
        assert_eq!(words(&enumerate_qsh(0, 0)), [""]);
        assert_eq!(words(&enumerate_qsh(0, 2)), ["12"]);
    }

    #[test]
    fn sh_examples() {
        assert_eq!(
            words(&enumerate_sh(2, 2)),
            ["1234", "1324", "1423", "2314", "2413", "3412"]
        );
        assert_eq!(words(&enumerate_sh(1, 1)), ["12", "21"]);
        assert_eq!(words(&enumerate_sh(0, 3)), ["123"]);
    }

    #[test]
    fn inc_examples() {
        assert_eq!(words(&enumerate_inc(3)), ["111", "112", "122", "123"]);
        assert_eq!(words(&enumerate_inc(1)), ["1"]);
        assert_eq!(enumerate_inc(4).len(), 8);
        assert_eq!(words(&enumerate_inc(0)), [""]);
    }

    #[test]
    fn adm_examples() {
        let pairs: Vec<(String, String)> = enumerate_adm(2)
            .iter()
            .map(|p| {
                (
                    words(std::slice::from_ref(&p.first))[0].clone(),
                    words(std::slice::from_ref(&p.second))[0].clone(),
                )
            })
            .collect();
        let expected = [("11", "12"), ("12", "11"), ("12", "12"), ("12", "21")];
        assert_eq!(
            pairs,
            expected
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .to_vec()
        );
        assert_eq!(enumerate_adm(1).len(), 1);
        let zero = enumerate_adm(0);
        assert_eq!(zero.len(), 1);
        assert!(zero[0].first.is_empty() && zero[0].second.is_empty());
    }

    // Brute force over all pairs of surjections on [k].
    fn all_surjections(k: usize) -> Vec<Surjection> {
        let mut out = Vec::new();
        let total = k.pow(k as u32);
        for code in 0..total.max(1) {
            let mut word = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                word.push(c % k + 1);
                c /= k;
            }
            if let Ok(s) = Surjection::new(word) {
                out.push(s);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn adm_matches_filter() {
        for k in 0..=4 {
            let all = all_surjections(k);
            let mut brute = Vec::new();
            for a in &all {
                for b in &all {
                    if AdmPair::is_admissible(a, b) {
                        brute.push(AdmPair {
                            first: a.clone(),
                            second: b.clone(),
                        });
                    }
                }
            }
            brute.sort();
            assert_eq!(enumerate_adm(k), brute, "k = {k}");
        }
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(surj_factorial(&s(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(surj_factorial(&s(&[1, 2, 3])), BigInt::from(1));
        assert_eq!(surj_factorial(&s(&[1, 1, 2])), BigInt::from(2));
    }

    #[test]
    fn hoffman_examples() {
        let (lhs, rhs) = hoffman_sides(1, 1);
        let expected: LinComb<Surjection> = [s(&[1, 1]), s(&[1, 2]), s(&[2, 1])]
            .into_iter()
            .map(|w| (w, rat(1, 1)))
            .collect();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
        assert!(check_hoffman_identity(0, 3));
        assert!(check_hoffman_identity(2, 2));
    }

    #[test]
    fn counts_and_inclusions() {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for k in 0..=6 {
            for l in 0..=6 {
                let sh = enumerate_sh(k, l);
                assert_eq!(sh.len(), binom(k + l, k));
                let qsh = enumerate_qsh(k, l);
                assert!(sh.iter().all(|w| qsh.binary_search(w).is_ok()));
                let mut dedup = qsh.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), qsh.len());
            }
        }
        for k in 1..=8 {
            assert_eq!(enumerate_inc(k).len(), 1 << (k - 1));
        }
    }

    #[test]
    fn composition_and_tensor() {
        let tau = s(&[1, 1]);
        let sigma = s(&[2, 1]);
        assert_eq!(tau.after(&sigma), s(&[1, 1]));
        assert_eq!(s(&[1]).tensor(&s(&[1, 1])), s(&[1, 2, 2]));
        assert!(Surjection::new(vec![1, 3]).is_err());
        assert_eq!(s(&[1, 2, 1]).to_string(), "(1,2,1)");
    }
}
