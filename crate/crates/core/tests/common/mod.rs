#![allow(dead_code)]

use std::sync::Arc;

use bsdh_core::{Family, RootSystem, Word};
use rand::Rng;

pub fn rs(f: Family, n: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::named(f, n).unwrap())
}

pub fn word(f: Family, n: usize, roots: &[usize]) -> Word {
    Word::new(rs(f, n), roots).unwrap()
}

/// The four small systems used for exhaustive sweeps.
pub fn small_systems() -> Vec<Arc<RootSystem>> {
    vec![
        rs(Family::A, 2),
        rs(Family::A, 3),
        rs(Family::B, 2),
        rs(Family::G, 2),
    ]
}

/// Every word of length `1..=max_len` over `rs`.
pub fn all_words(rs: &Arc<RootSystem>, max_len: usize) -> Vec<Word> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for r in 1..=n {
                let mut v = w.clone();
                v.push(r);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::new(Arc::clone(rs), v).unwrap()));
        layer = next;
    }
    out
}

/// Exhaustive words of length `<= max_len` over A2, A3, B2 and G2.
pub fn exhaustive_small(max_len: usize) -> Vec<Word> {
    small_systems().iter().flat_map(|rs| all_words(rs, max_len)).collect()
}

/// Every finite type of rank at most `max_rank`, grouped by family.
pub fn systems_by_family(max_rank: usize) -> Vec<(Family, Vec<Arc<RootSystem>>)> {
    Family::ALL
        .into_iter()
        .map(|f| {
            let systems = (1..=max_rank)
                .filter(|&n| f.admits_rank(n))
                .map(|n| rs(f, n))
                .collect();
            (f, systems)
        })
        .collect()
}

pub fn random_word(rng: &mut impl Rng, rs: &Arc<RootSystem>, len: usize) -> Word {
    let roots: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=rs.rank())).collect();
    Word::new(Arc::clone(rs), &roots).unwrap()
}

/// Random word over a random finite type of rank <= 6, length in `lens`.
pub fn random_any(rng: &mut impl Rng, lens: std::ops::RangeInclusive<usize>) -> Word {
    let families = systems_by_family(6);
    let (_, systems) = &families[rng.gen_range(0..families.len())];
    let rs = &systems[rng.gen_range(0..systems.len())];
    let len = rng.gen_range(lens);
    random_word(rng, rs, len)
}

/// `A_n` word `(1..n, 1..n-1, ..., 1)`.
pub fn staircase(n: usize) -> Word {
    let roots: Vec<usize> = (0..n).flat_map(|k| 1..=n - k).collect();
    word(Family::A, n, &roots)
}

/// `(j, r)` straight from the Cartan matrix, for 1-based positions.
pub fn pair(w: &Word, j: usize, r: usize) -> i64 {
    let roots = w.roots();
    w.root_system().cartan()[roots[r - 1] - 1][roots[j - 1] - 1] as i64
}

/// Five-term closed form for `L_{i_1 ... i_5}`: coefficients `d_1..d_5`.
pub fn five_term(w: &Word, i: [usize; 5]) -> [i64; 5] {
    let p = |a: usize, b: usize| pair(w, i[a - 1], i[b - 1]);
    [
        1,
        -p(2, 1),
        -p(3, 1) + p(3, 2) * p(2, 1),
        -p(4, 1) + p(4, 2) * p(2, 1) + p(4, 3) * p(3, 1) - p(4, 3) * p(3, 2) * p(2, 1),
        -p(5, 1) + p(5, 2) * p(2, 1) + p(5, 3) * p(3, 1) + p(5, 4) * p(4, 1)
            - p(5, 3) * p(3, 2) * p(2, 1)
            - p(5, 4) * p(4, 2) * p(2, 1)
            - p(5, 4) * p(4, 3) * p(3, 1)
            + p(5, 4) * p(4, 3) * p(3, 2) * p(2, 1),
    ]
}

/// Repeated-root five-term form: `c_2..c_5` when `beta(i_1) = beta(i_2)`.
pub fn five_term_repeated(w: &Word, i: [usize; 5]) -> [i64; 4] {
    let p = |a: usize, b: usize| pair(w, i[a - 1], i[b - 1]);
    [
        -1,
        p(3, 2),
        p(4, 2) - p(4, 3) * p(3, 2),
        p(5, 2) - p(5, 3) * p(3, 2) - p(5, 4) * p(4, 2) + p(5, 4) * p(4, 3) * p(3, 2),
    ]
}

/// All `k`-element subsets of `1..=m`, as sorted position lists.
pub fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << m)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..m).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect())
        .collect()
}
