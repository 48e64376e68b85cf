//! Canonical basis blades and the blade-level product sign rule.
//!
//! A blade is a bitmask over generators: bit i−1 set means eᵢ is a factor,
//! and the factors are always written in ascending index order (`e13` is
//! e₁e₃; `e31` does not exist). The product of two blades is, up to sign,
//! the XOR of their masks; the sign combines the transposition parity of
//! interleave-sorting the factor lists with the metric signs of squared
//! generators.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::signature::Signature;

/// A canonical basis blade, identified by its generator bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BladeIndex(usize);

impl BladeIndex {
    pub fn new(mask: usize) -> Self {
        Self(mask)
    }

    pub fn scalar() -> Self {
        Self(0)
    }

    pub fn mask(&self) -> usize {
        self.0
    }

    /// Number of generator factors.
    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    /// 1-indexed generator indices, ascending.
    pub fn generators(&self) -> impl Iterator<Item = u32> + '_ {
        (0..usize::BITS).filter(move |k| self.0 >> k & 1 == 1).map(|k| k + 1)
    }

    /// Text label: `"1"` for the scalar blade, otherwise `"e"` followed by
    /// the ascending generator digits (`"e13"`).
    pub fn label(&self) -> String {
        if self.0 == 0 {
            return "1".to_owned();
        }
        let mut s = String::from("e");
        for i in self.generators() {
            s.push(char::from_digit(i, 10).expect("generator index fits a digit"));
        }
        s
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parity of the transpositions needed to interleave-sort the concatenated
/// factor lists of `u` and `v`: for every generator in `v`, count the
/// generators of `u` strictly above it.
fn reordering_sign(u: usize, v: usize) -> i32 {
    let mut shifted = u >> 1;
    let mut swaps = 0u32;
    while shifted != 0 {
        swaps += (shifted & v).count_ones();
        shifted >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two canonical blades: `u · v = sign · blade(u XOR v)`.
///
/// Total over valid blades; the sign multiplies the reordering parity with
/// eᵢ² for every generator the two blades share.
pub fn blade_product(u: BladeIndex, v: BladeIndex, sig: Signature) -> (i32, BladeIndex) {
    assert!(
        u.mask() < sig.blade_count() && v.mask() < sig.blade_count(),
        "blade out of range for {sig}"
    );
    let mut sign = reordering_sign(u.mask(), v.mask());
    let mut common = u.mask() & v.mask();
    while common != 0 {
        let i = common.trailing_zeros() + 1;
        sign *= sig.generator_square(i);
        common &= common - 1;
    }
    (sign, BladeIndex::new(u.mask() ^ v.mask()))
}

/// Dense 2ⁿ×2ⁿ table of product signs for one signature. The geometric
/// product and the symbolic center search hit this on every term, so it is
/// built once per algebra and cached.
pub(crate) struct ProductTable {
    blade_count: usize,
    signs: Vec<i8>,
}

impl ProductTable {
    fn build(sig: Signature) -> Self {
        let blade_count = sig.blade_count();
        let mut signs = Vec::with_capacity(blade_count * blade_count);
        for u in 0..blade_count {
            for v in 0..blade_count {
                let (s, _) = blade_product(BladeIndex::new(u), BladeIndex::new(v), sig);
                signs.push(s as i8);
            }
        }
        Self { blade_count, signs }
    }

    #[inline]
    pub(crate) fn sign(&self, u: usize, v: usize) -> i32 {
        self.signs[u * self.blade_count + v] as i32
    }
}

pub(crate) fn product_table(sig: Signature) -> Arc<ProductTable> {
    static CACHE: OnceLock<Mutex<HashMap<Signature, Arc<ProductTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("product table cache poisoned");
    guard
        .entry(sig)
        .or_insert_with(|| Arc::new(ProductTable::build(sig)))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    const E1: BladeIndex = BladeIndex(0b001);
    const E2: BladeIndex = BladeIndex(0b010);
    const E13: BladeIndex = BladeIndex(0b101);

    #[test]
    fn sorted_factors_pick_up_no_sign() {
        let (s, r) = blade_product(E1, E2, sig(2, 0));
        assert_eq!((s, r.mask()), (1, 0b011));
    }

    #[test]
    fn one_transposition_flips_the_sign() {
        let (s, r) = blade_product(E2, E1, sig(2, 0));
        assert_eq!((s, r.mask()), (-1, 0b011));
    }

    #[test]
    fn interleaving_counts_transpositions() {
        // e13 · e2 = e1e3e2 = −e1e2e3
        let (s, r) = blade_product(E13, E2, sig(3, 0));
        assert_eq!((s, r.mask()), (-1, 0b111));
    }

    #[test]
    fn squared_generator_uses_the_metric() {
        let (s, r) = blade_product(E1, E1, sig(0, 3));
        assert_eq!((s, r.mask()), (-1, 0));
        let (s, _) = blade_product(E1, E1, sig(3, 0));
        assert_eq!(s, 1);
    }

    #[test]
    fn table_matches_direct_computation() {
        let sig = sig(1, 2);
        let table = product_table(sig);
        for u in sig.blade_masks() {
            for v in sig.blade_masks() {
                let (s, _) = blade_product(BladeIndex::new(u), BladeIndex::new(v), sig);
                assert_eq!(table.sign(u, v), s);
            }
        }
    }

    #[test]
    fn labels_use_ascending_generators() {
        assert_eq!(BladeIndex::new(0).label(), "1");
        assert_eq!(E13.label(), "e13");
        assert_eq!(BladeIndex::new(0b111).label(), "e123");
    }
}
