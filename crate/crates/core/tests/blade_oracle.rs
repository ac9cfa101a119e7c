//! Blade products against an independent word-reduction oracle: concatenate
//! the generator words, bubble-sort with a sign flip per adjacent swap, then
//! cancel equal neighbours using their squares.

use clifford_morph::{blade_product, Blade, Sign, Signature};

fn reduce(sig: &Signature, a: Blade, b: Blade) -> (i64, u32) {
    let mut word: Vec<usize> = a.indices().chain(b.indices()).collect();
    let mut sign = 1i64;
    for i in 0..word.len() {
        for j in 0..word.len() - 1 - i {
            if word[j] > word[j + 1] {
                word.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let mut mask = 0u32;
    let mut k = 0;
    while k < word.len() {
        if k + 1 < word.len() && word[k] == word[k + 1] {
            if sig.square(word[k]) == Sign::Minus {
                sign = -sign;
            }
            k += 2;
        } else {
            mask |= 1 << word[k];
            k += 1;
        }
    }
    (sign, mask)
}

fn all_signatures(max_dim: usize) -> Vec<Signature> {
    (1..=max_dim)
        .flat_map(|n| (0..1u32 << n).map(move |neg| (n, neg)))
        .map(|(n, neg)| {
            let squares = (0..n).map(|i| if neg >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
            Signature::from_squares(squares).unwrap()
        })
        .collect()
}

#[test]
fn matches_word_reduction_for_every_sign_pattern() {
    for sig in all_signatures(5) {
        for a in Blade::all(sig.dim()) {
            for b in Blade::all(sig.dim()) {
                let (sign, blade) = blade_product(&sig, a, b);
                assert_eq!((sign.to_i64(), blade.mask()), reduce(&sig, a, b), "{sig}: {a} * {b}");
            }
        }
    }
}

#[test]
fn generators_anticommute_and_square_to_metric() {
    for sig in all_signatures(4) {
        for i in 0..sig.dim() {
            let (s, b) = blade_product(&sig, Blade::generator(i), Blade::generator(i));
            assert_eq!((s, b), (sig.square(i), Blade::SCALAR));
            for j in (0..sig.dim()).filter(|&j| j != i) {
                let (s1, b1) = blade_product(&sig, Blade::generator(i), Blade::generator(j));
                let (s2, b2) = blade_product(&sig, Blade::generator(j), Blade::generator(i));
                assert_eq!(b1, b2);
                assert_eq!(s1, -s2);
            }
        }
    }
}
