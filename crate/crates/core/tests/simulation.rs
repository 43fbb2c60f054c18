use ncrewrite::fixtures::{two_state_halter, two_state_looper};
use ncrewrite::harness::random_config;
use ncrewrite::rule::Schema;
use ncrewrite::tm::{Outcome, Step};
use ncrewrite::{
    decode_structure, encode_config, minsky_utm, tm_run, tm_step, Construction, EncodedMachine,
    Reduct, TmConfig, TmSpec, Word, DEFAULT_BUDGET,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BOTH: [Construction; 2] = [Construction::Nilpotency, Construction::ZeroDivisor];

fn config(max_side: usize) -> impl Strategy<Value = TmConfig> {
    let spec = minsky_utm();
    let (states, colors) = (spec.states(), spec.colors());
    let run = move || prop::collection::vec(0..colors, 0..=max_side);
    (0..states, 0..colors, run(), run())
        .prop_map(|(q, p, u, v)| TmConfig::new(q, p, u, v))
}

/// Follows the leftmost rewrite chain of `t W` and checks each step against
/// the machine: transport rules keep the structure, the single simulation
/// rule performs exactly one machine step, and a halt rule only fires on a
/// structure sitting at a Stop entry.
fn walk(spec: &TmSpec, construction: Construction, c: &TmConfig) {
    let p = construction.presentation(spec);
    let expected = tm_step(spec, c);
    let mut word = Word::new(vec![ncrewrite::Letter::T]).concat(&encode_config(c, construction));
    let mut simulated = false;
    while let Some(step) = p.reduce_once(&word).unwrap() {
        let schema = p.rule(step.redex.rule).tag.schema;
        match step.result {
            Reduct::Zero => {
                assert!(schema.is_halt(), "{schema:?} produced zero");
                let at = decode_structure(&word, construction).expect("structured");
                assert_eq!(tm_step(spec, &at), Step::Halted, "halt rule fired on {at:?}");
                assert!(simulated || expected == Step::Halted);
                return;
            }
            Reduct::Word(next) => {
                let before = decode_structure(&word, construction).expect("structured");
                let after = decode_structure(&next, construction).expect("structured");
                if schema.is_transport() {
                    assert_eq!(before, after, "{schema:?} changed the structure");
                } else {
                    assert!(schema.is_simulation(), "unexpected {schema:?}");
                    assert!(!simulated, "two simulation steps for one clock letter");
                    assert_eq!(Step::Next(after.clone()), expected, "wrong move from {c:?}");
                    simulated = true;
                }
                word = next;
            }
        }
    }
    assert!(simulated, "no simulation step for {c:?}");
    assert_eq!(*word.last().unwrap(), construction.trailer());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn encode_decode_round_trip(c in config(8), zd in any::<bool>()) {
        let construction = BOTH[zd as usize];
        let w = encode_config(&c, construction);
        prop_assert_eq!(decode_structure(&w, construction), Some(c.clone()));
        let mut clocked = w.into_letters();
        clocked.insert(2.min(clocked.len()), ncrewrite::Letter::T);
        clocked.insert(0, ncrewrite::Letter::T);
        prop_assert_eq!(decode_structure(&clocked, construction), Some(c));
    }

    #[test]
    fn structure_evolves_like_the_machine(c in config(4), zd in any::<bool>()) {
        walk(&minsky_utm(), BOTH[zd as usize], &c);
    }
}

#[test]
fn malformed_structures_do_not_decode() {
    let bad = ncrewrite::word::w("R a0 P1 Q2 R");
    assert_eq!(decode_structure(&bad, Construction::Nilpotency), None);
    let wrong_edge = ncrewrite::word::w("L Q0 P0 R");
    assert_eq!(decode_structure(&wrong_edge, Construction::Nilpotency), None);
}

#[test]
fn generator_counts_and_closure() {
    let spec = minsky_utm();
    let nilp = Construction::Nilpotency.presentation(&spec);
    let zd = Construction::ZeroDivisor.presentation(&spec);
    assert_eq!(nilp.rules().len(), 1560);
    assert_eq!(zd.rules().len(), 441);
    for p in [&nilp, &zd] {
        let alphabet = p.alphabet();
        for r in p.rules() {
            assert!(r.lhs.iter().all(|l| alphabet.contains(*l)));
            if let Reduct::Word(rhs) = &r.rhs {
                assert!(rhs.iter().all(|l| alphabet.contains(*l)));
            }
        }
        assert!(ncrewrite::verify::audit_orientation(p).is_empty());
        assert!(ncrewrite::verify::find_ambiguities(p).is_empty());
    }
    let halts = |p: &ncrewrite::Presentation| {
        p.rules().iter().filter(|r| r.rhs.is_zero()).count()
    };
    assert_eq!(halts(&nilp), 1);
    assert_eq!(halts(&zd), 1);
    assert_eq!(nilp.rules().last().unwrap().tag.schema, Schema::Tt7);
    assert_eq!(zd.rules().last().unwrap().tag.schema, Schema::Td7);
}

#[test]
fn small_machines_generate_sound_presentations() {
    for spec in [two_state_halter(), two_state_looper()] {
        for construction in BOTH {
            let p = construction.presentation(&spec);
            assert!(ncrewrite::verify::find_ambiguities(&p).is_empty());
            assert!(ncrewrite::verify::audit_orientation(&p).is_empty());
            for q in 0..2 {
                for j in 0..2 {
                    for u in [vec![], vec![0], vec![1]] {
                        for v in [vec![], vec![0], vec![1]] {
                            walk(&spec, construction, &TmConfig::new(q, j, u.clone(), v));
                        }
                    }
                }
            }
        }
    }
}

// The deciders agree with the machine oracle: a witness exists within k + 1
// exactly when the machine halts within k steps.
#[test]
fn deciders_track_the_machine_oracle() {
    let spec = two_state_halter();
    let nilp = EncodedMachine::new(spec.clone(), Construction::Nilpotency);
    let zd = EncodedMachine::new(spec.clone(), Construction::ZeroDivisor);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let c = random_config(&mut rng, &spec, 3);
        let oracle = tm_run(&spec, &c, 30, false).outcome;
        let nmax = 31;
        let a = nilp.annihilate_bounded(&c, nmax, DEFAULT_BUDGET).unwrap();
        let n = nilp.nilpotent_bounded(&c, nmax, DEFAULT_BUDGET).unwrap();
        let z = zd.zerodivisor_witness_bounded(&c, nmax, DEFAULT_BUDGET).unwrap();
        match oracle {
            Outcome::Halted(k) => {
                for found in [a.witnessed(), n.witnessed(), z.witnessed()] {
                    let found = found.expect("halting config must be witnessed");
                    assert!(found <= k + 1, "witness {found} for halting time {k}");
                }
                let na = a.witnessed().unwrap();
                assert!(nilp.replay_annihilator(&c, na, DEFAULT_BUDGET).unwrap());
                if na > 1 {
                    assert!(!nilp.replay_annihilator(&c, na - 1, DEFAULT_BUDGET).unwrap());
                }
                let nn = n.witnessed().unwrap();
                assert!(nilp.replay_power(&c, nn, DEFAULT_BUDGET).unwrap());
                let nz = z.witnessed().unwrap();
                assert!(zd.replay_annihilator(&c, nz, DEFAULT_BUDGET).unwrap());
            }
            Outcome::StillRunning(_) => {
                assert_eq!(a.witnessed(), None);
                assert_eq!(n.witnessed(), None);
                assert_eq!(z.witnessed(), None);
            }
        }
    }
}

// Raising the search bound never loses a witness and never changes it.
#[test]
fn deciders_are_monotone_in_the_bound() {
    let spec = two_state_halter();
    let m = EncodedMachine::new(spec.clone(), Construction::Nilpotency);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = std::iter::repeat_with(|| random_config(&mut rng, &spec, 3))
        .find(|c| matches!(tm_run(&spec, c, 30, false).outcome, Outcome::Halted(k) if k >= 2))
        .expect("some config halts after a few steps");
    let mut first = None;
    for nmax in 1..=12 {
        let found = m.annihilate_bounded(&c, nmax, DEFAULT_BUDGET).unwrap().witnessed();
        if let Some(n) = first {
            assert_eq!(found, Some(n));
        } else {
            first = found;
        }
    }
    assert!(first.is_some());
}

#[test]
fn looper_is_never_witnessed() {
    let spec = two_state_looper();
    let m = EncodedMachine::new(spec.clone(), Construction::Nilpotency);
    let c = TmConfig::new(0, 0, vec![], vec![]);
    assert!(matches!(tm_run(&spec, &c, 50, false).outcome, Outcome::StillRunning(50)));
    assert_eq!(m.annihilate_bounded(&c, 30, DEFAULT_BUDGET).unwrap().witnessed(), None);
}
