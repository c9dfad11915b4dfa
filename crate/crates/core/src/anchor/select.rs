//! Deterministic linear-time selection (median of medians).

use std::cmp::Ordering;

/// The element of rank `k` (0-based) in `v` under `cmp`. Reorders `v`.
pub(crate) fn select<T: Copy>(v: &mut [T], k: usize, cmp: &impl Fn(&T, &T) -> Ordering) -> T {
    assert!(k < v.len(), "rank out of range");
    let n = v.len();
    if n <= 10 {
        v.sort_unstable_by(cmp);
        return v[k];
    }
    let groups = n.div_ceil(5);
    for g in 0..groups {
        let s = 5 * g;
        let e = (s + 5).min(n);
        v[s..e].sort_unstable_by(cmp);
        v.swap(g, s + (e - s - 1) / 2);
    }
    let pivot = select(&mut v[..groups], groups / 2, cmp);
    // Three-way partition: [< pivot | == pivot | > pivot].
    let (mut lt, mut i, mut gt) = (0usize, 0usize, n);
    while i < gt {
        match cmp(&v[i], &pivot) {
            Ordering::Less => {
                v.swap(lt, i);
                lt += 1;
                i += 1;
            }
            Ordering::Greater => {
                gt -= 1;
                v.swap(i, gt);
            }
            Ordering::Equal => i += 1,
        }
    }
    if k < lt {
        select(&mut v[..lt], k, cmp)
    } else if k < gt {
        pivot
    } else {
        select(&mut v[gt..], k - gt, cmp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_sorting(mut v in prop::collection::vec(-50i32..50, 1..300), pick in 0usize..1000) {
            let k = pick % v.len();
            let mut sorted = v.clone();
            sorted.sort();
            prop_assert_eq!(select(&mut v, k, &|a: &i32, b: &i32| a.cmp(b)), sorted[k]);
        }
    }
}
