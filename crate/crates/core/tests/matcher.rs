use ncrewrite::{minsky_utm, Construction, Letter, Redex, Word};
use proptest::prelude::*;

fn naive(patterns: &[Word], word: &[Letter]) -> Vec<Redex> {
    let mut out = Vec::new();
    for pos in 0..word.len() {
        for (rule, p) in patterns.iter().enumerate() {
            if word[pos..].starts_with(p) {
                out.push(Redex { pos, rule });
            }
        }
    }
    out.sort();
    out
}

fn letters(construction: Construction) -> Vec<Letter> {
    construction.alphabet(&minsky_utm()).letters()
}

fn word_from(construction: Construction, picks: &[usize]) -> Vec<Letter> {
    let pool = letters(construction);
    picks.iter().map(|&i| pool[i % pool.len()]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn automaton_matches_naive_scan(
        zd in any::<bool>(),
        picks in prop::collection::vec(0usize..64, 0..60),
    ) {
        let construction = if zd { Construction::ZeroDivisor } else { Construction::Nilpotency };
        let p = construction.presentation(&minsky_utm());
        let lhs: Vec<Word> = p.rules().iter().map(|r| r.lhs.clone()).collect();
        let word = word_from(construction, &picks);
        let expected = naive(&lhs, &word);
        let m = p.matcher();
        prop_assert_eq!(m.redexes(&word), expected.clone());
        prop_assert_eq!(m.count(&word), expected.len());
        prop_assert_eq!(m.leftmost(&word, 0), expected.first().copied());
        let rightmost = expected.iter().map(|r| r.pos).max();
        prop_assert_eq!(m.rightmost(&word).map(|r| r.pos), rightmost);
    }
}

#[test]
fn structured_words_hit_the_expected_rule() {
    let p = Construction::Nilpotency.presentation(&minsky_utm());
    let word = ncrewrite::word::w("t R a1 Q2 P3 a0 R");
    let found = p.matcher().redexes(&word);
    assert_eq!(found, naive(&p.rules().iter().map(|r| r.lhs.clone()).collect::<Vec<_>>(), &word));
    assert!(!found.is_empty());
}
