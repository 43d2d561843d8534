//! Subset enumeration in (cardinality, lexicographic) order. All callers
//! rely on this order for deterministic witnesses and listings.

/// Visit every `size`-subset of `0..n` in lexicographic order. The visitor
/// returns `false` to stop; the return value is `false` iff enumeration was
/// stopped early.
pub(crate) fn for_each_subset(n: usize, size: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let mut scratch = Vec::with_capacity(size);
    descend(n, size, 0, &mut scratch, visit)
}

/// Same, but only subsets whose smallest element is `first`.
pub(crate) fn for_each_subset_with_first(
    n: usize,
    size: usize,
    first: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    debug_assert!(size >= 1);
    if first + size > n {
        return true;
    }
    let mut scratch = Vec::with_capacity(size);
    scratch.push(first);
    descend(n, size, first + 1, &mut scratch, visit)
}

fn descend(
    n: usize,
    size: usize,
    start: usize,
    scratch: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if scratch.len() == size {
        return visit(scratch);
    }
    let remaining = size - scratch.len();
    if start + remaining > n {
        return true;
    }
    for v in start..=(n - remaining) {
        scratch.push(v);
        let keep_going = descend(n, size, v + 1, scratch, visit);
        scratch.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_subset(n, size, &mut |s| {
            out.push(s.to_vec());
            true
        });
        out
    }

    #[test]
    fn pairs_of_four_in_lex_order() {
        assert_eq!(
            collect(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn oversized_subsets_are_empty() {
        assert!(collect(2, 3).is_empty());
    }

    #[test]
    fn early_stop_propagates() {
        let mut seen = 0;
        let finished = for_each_subset(5, 1, &mut |_| {
            seen += 1;
            seen < 3
        });
        assert!(!finished);
        assert_eq!(seen, 3);
    }

    #[test]
    fn fixed_first_element_chunks_cover_everything() {
        let mut chunked = Vec::new();
        for first in 0..4 {
            for_each_subset_with_first(4, 2, first, &mut |s| {
                chunked.push(s.to_vec());
                true
            });
        }
        assert_eq!(chunked, collect(4, 2));
    }
}
