//! Trial-division factorization for `Z/n`.

/// Largest modulus accepted by [`factor`].
pub const MAX_FACTORABLE: u64 = 1_000_000_000_000;

/// Prime factorization `[(p, e)]` in increasing prime order. `None` when
/// `n < 2` or `n > MAX_FACTORABLE`.
pub fn factor(mut n: u64) -> Option<Vec<(u64, u32)>> {
    if !(2..=MAX_FACTORABLE).contains(&n) {
        return None;
    }
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small() {
        assert_eq!(factor(12), Some(vec![(2, 2), (3, 1)]));
        assert_eq!(factor(97), Some(vec![(97, 1)]));
        assert_eq!(factor(100), Some(vec![(2, 2), (5, 2)]));
        assert_eq!(factor(1), None);
        assert_eq!(factor(0), None);
    }

    #[test]
    fn large() {
        assert_eq!(factor(999_999_000_001), Some(vec![(999_999_000_001, 1)]));
        assert_eq!(factor(1_000_000_000_000), Some(vec![(2, 12), (5, 12)]));
        assert_eq!(factor(MAX_FACTORABLE + 1), None);
    }
}
