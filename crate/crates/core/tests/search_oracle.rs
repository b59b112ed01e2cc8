//! Completeness oracle for the model search: fix only the cells forced by
//! the axioms, scan every fill of the rest, validate, and bucket by
//! canonical form. The propagating search must find exactly the same
//! models.

use std::collections::BTreeSet;

use omlab_core::algebra::{FiniteAlgebra, RawAlgebra};
use omlab_core::format::corpus;
use omlab_core::search::{canonical_form, enumerate_models, CanonicalForm, SearchSpec};

/// Brute force over all fills of the non-forced cells.
fn brute_force_canonical_models(n: usize) -> BTreeSet<CanonicalForm> {
    let one = n - 1;
    let mut template = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        template[x][x] = one;
        template[x][one] = one;
        template[one][x] = x;
        template[0][x] = one;
    }
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| template[x][y] == usize::MAX)
        .collect();

    let mut out = BTreeSet::new();
    let mut counter = vec![0usize; free.len()];
    loop {
        let mut rows = template.clone();
        for (&(x, y), &v) in free.iter().zip(&counter) {
            rows[x][y] = v;
        }
        let raw = RawAlgebra {
            size: n,
            imp: rows,
            one,
            zero: 0,
        };
        if let Ok(alg) = FiniteAlgebra::validate(&raw) {
            out.insert(canonical_form(&alg));
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == counter.len() {
                return out;
            }
            counter[k] += 1;
            if counter[k] < n {
                break;
            }
            counter[k] = 0;
            k += 1;
        }
    }
}

/// Independent isomorphism test: scan all bijections fixing zero and one.
fn isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let n = a.size();
    let middle_a: Vec<usize> = (0..n).filter(|&x| x != a.zero() && x != a.one()).collect();
    let middle_b: Vec<usize> = (0..n).filter(|&x| x != b.zero() && x != b.one()).collect();
    let mut perm = middle_b.clone();
    let mut found = false;
    permute_all(&mut perm, 0, &mut |p| {
        let mut map = vec![0usize; n];
        map[a.zero()] = b.zero();
        map[a.one()] = b.one();
        for (i, &x) in middle_a.iter().enumerate() {
            map[x] = p[i];
        }
        let ok = (0..n).all(|x| (0..n).all(|y| map[a.imp(x, y)] == b.imp(map[x], map[y])));
        found |= ok;
    });
    found
}

fn permute_all<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[test]
fn search_matches_brute_force_oracle_at_small_sizes() {
    for n in 2..=4 {
        let oracle = brute_force_canonical_models(n);
        let models = enumerate_models(&SearchSpec::new(n)).unwrap();
        let searched: BTreeSet<CanonicalForm> = models.iter().map(canonical_form).collect();
        assert_eq!(searched, oracle, "model mismatch at size {n}");
        assert_eq!(models.len(), searched.len(), "duplicates at size {n}");
    }
}

#[test]
fn oracle_counts_are_the_expected_ones() {
    assert_eq!(brute_force_canonical_models(2).len(), 1);
    assert_eq!(brute_force_canonical_models(3).len(), 0);
    assert_eq!(brute_force_canonical_models(4).len(), 1);
}

#[test]
fn emitted_models_are_pairwise_non_isomorphic() {
    for n in 2..=6 {
        let models = enumerate_models(&SearchSpec::new(n)).unwrap();
        for i in 0..models.len() {
            assert!(isomorphic(&models[i], &models[i]));
            for j in i + 1..models.len() {
                assert!(
                    !isomorphic(&models[i], &models[j]),
                    "models {i} and {j} at size {n} are isomorphic"
                );
            }
        }
    }
}

#[test]
fn relabeled_mo2_is_isomorphic_to_mo2_but_not_to_o6() {
    let mo2 = corpus::mo2();
    let o6 = corpus::o6();
    assert!(isomorphic(&mo2, &mo2));
    assert!(!isomorphic(&mo2, &o6));
    assert_eq!(canonical_form(&mo2), canonical_form(&mo2));
    assert_ne!(canonical_form(&mo2), canonical_form(&o6));
}
