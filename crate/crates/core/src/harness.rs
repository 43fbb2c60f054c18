//! Machine-versus-algebra experiments.
//!
//! Multiplying a configuration word on the left by `t` performs one machine
//! step, so halting shows up as an annihilating power of `t`. Everything
//! here is a bounded search: a positive answer comes with a replayable
//! witness, a negative one is only ever [`DecisionOutcome::Unknown`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::encodings::{encode_config, Construction};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::rule::Reduct;
use crate::tm::{tm_step, Step, TmConfig, TmSpec};
use crate::verify::Side;
use crate::word::{Letter, Word};

/// `deg_t(w) + deg_s(w)`.
pub fn htilde(w: &[Letter]) -> usize {
    w.iter().filter(|l| l.is_t() || l.is_s()).count()
}

pub fn deg_t(w: &[Letter]) -> usize {
    w.iter().filter(|l| l.is_t()).count()
}

/// A machine together with one of its presentations.
#[derive(Clone, Debug)]
pub struct EncodedMachine {
    spec: TmSpec,
    construction: Construction,
    presentation: Presentation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub step: usize,
    pub config: TmConfig,
    /// `t` times the configuration word.
    pub before: Word,
    /// Normal form of `before`.
    pub after: Reduct,
    /// Normal form of the next configuration word followed by `t` (or `s`);
    /// zero when the machine halts here.
    pub expected: Reduct,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LockstepReport {
    pub construction: Construction,
    pub records: Vec<StepRecord>,
    /// Whether the machine reached a Stop entry.
    pub halted: bool,
    pub first_divergence: Option<usize>,
}

impl LockstepReport {
    pub fn steps_compared(&self) -> usize {
        self.records.len()
    }

    pub fn matched(&self) -> bool {
        self.first_divergence.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    /// The exponent that produced zero.
    pub n: usize,
    /// Rewrites spent over the whole search.
    pub rewrite_steps: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecisionOutcome {
    Witnessed(Witness),
    /// No witness up to this bound.
    Unknown(usize),
}

impl DecisionOutcome {
    pub fn witnessed(&self) -> Option<usize> {
        match self {
            DecisionOutcome::Witnessed(w) => Some(w.n),
            DecisionOutcome::Unknown(_) => None,
        }
    }
}

impl EncodedMachine {
    pub fn new(spec: TmSpec, construction: Construction) -> Self {
        let presentation = construction.presentation(&spec);
        EncodedMachine {
            spec,
            construction,
            presentation,
        }
    }

    pub fn spec(&self) -> &TmSpec {
        &self.spec
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn encode(&self, c: &TmConfig) -> Word {
        encode_config(c, self.construction)
    }

    fn nf(&self, w: &Word, budget: usize) -> Result<Reduct> {
        Ok(self.presentation.normalize_word(w, budget)?.0)
    }

    /// Runs the machine and the rewriting side by side for up to `steps`
    /// machine steps, stopping early at a Stop entry.
    pub fn lockstep(&self, c0: &TmConfig, steps: usize, budget: usize) -> Result<LockstepReport> {
        if steps == 0 {
            return Err(Error::InvalidArgument("lockstep needs at least one step".into()));
        }
        c0.validate(&self.spec)?;
        let t = Word::new(vec![Letter::T]);
        let trailer = Word::new(vec![self.construction.trailer()]);
        let mut report = LockstepReport {
            construction: self.construction,
            records: Vec::new(),
            halted: false,
            first_divergence: None,
        };
        let mut config = c0.clone();
        for step in 0..steps {
            let before = t.concat(&self.encode(&config));
            let after = self.nf(&before, budget)?;
            let (expected, next) = match tm_step(&self.spec, &config) {
                Step::Halted => (Reduct::Zero, None),
                Step::Next(next) => {
                    let shifted = self.encode(&next).concat(&trailer);
                    (self.nf(&shifted, budget)?, Some(next))
                }
            };
            let matched = after == expected;
            if !matched && report.first_divergence.is_none() {
                report.first_divergence = Some(step);
            }
            report.records.push(StepRecord {
                step,
                config,
                before,
                after,
                expected,
                matched,
            });
            match next {
                Some(next) => config = next,
                None => {
                    report.halted = true;
                    break;
                }
            }
        }
        Ok(report)
    }

    /// Smallest `N <= nmax` with `t^N W = 0`.
    ///
    /// Uses `nf(t^N W) = nf(t * nf(t^(N-1) W))`, so each round only pushes one
    /// more `t` through.
    pub fn annihilate_bounded(&self, c0: &TmConfig, nmax: usize, budget: usize) -> Result<DecisionOutcome> {
        if nmax == 0 {
            return Err(Error::InvalidArgument("nmax must be positive".into()));
        }
        c0.validate(&self.spec)?;
        let mut current = self.encode(c0);
        let mut spent = 0;
        for n in 1..=nmax {
            let mut next = Vec::with_capacity(current.len() + 1);
            next.push(Letter::T);
            next.extend_from_slice(&current);
            let (nf, steps) = self
                .presentation
                .normalize_word(&next, budget.saturating_sub(spent))?;
            spent += steps;
            match nf {
                Reduct::Zero => {
                    return Ok(DecisionOutcome::Witnessed(Witness {
                        n,
                        rewrite_steps: spent,
                    }))
                }
                Reduct::Word(w) => current = w,
            }
        }
        Ok(DecisionOutcome::Unknown(nmax))
    }

    /// Smallest `n <= nmax` with `(t W)^n = 0` (nilpotency construction).
    pub fn nilpotent_bounded(&self, c0: &TmConfig, nmax: usize, budget: usize) -> Result<DecisionOutcome> {
        if self.construction != Construction::Nilpotency {
            return Err(Error::InvalidArgument(
                "nilpotency search needs the nilpotency construction".into(),
            ));
        }
        if nmax == 0 {
            return Err(Error::InvalidArgument("nmax must be positive".into()));
        }
        c0.validate(&self.spec)?;
        let base = Word::new(vec![Letter::T]).concat(&self.encode(c0));
        let mut current = Word::empty();
        let mut spent = 0;
        for n in 1..=nmax {
            let (nf, steps) = self
                .presentation
                .normalize_word(&current.concat(&base), budget.saturating_sub(spent))?;
            spent += steps;
            match nf {
                Reduct::Zero => {
                    return Ok(DecisionOutcome::Witnessed(Witness {
                        n,
                        rewrite_steps: spent,
                    }))
                }
                Reduct::Word(w) => current = w,
            }
        }
        Ok(DecisionOutcome::Unknown(nmax))
    }

    /// A left annihilator `t^N` of the configuration word, `N <= nmax`
    /// (zero-divisor construction).
    pub fn zerodivisor_witness_bounded(
        &self,
        c0: &TmConfig,
        nmax: usize,
        budget: usize,
    ) -> Result<DecisionOutcome> {
        if self.construction != Construction::ZeroDivisor {
            return Err(Error::InvalidArgument(
                "zero-divisor search needs the zero-divisor construction".into(),
            ));
        }
        self.annihilate_bounded(c0, nmax, budget)
    }

    /// Recomputes `t^n W` from scratch and checks that it vanishes.
    pub fn replay_annihilator(&self, c0: &TmConfig, n: usize, budget: usize) -> Result<bool> {
        let w = Word::new(vec![Letter::T; n]).concat(&self.encode(c0));
        Ok(self.presentation.normalize_word(&w, budget)?.0.is_zero())
    }

    /// Recomputes `(t W)^n` from scratch and checks that it vanishes.
    pub fn replay_power(&self, c0: &TmConfig, n: usize, budget: usize) -> Result<bool> {
        let base = Word::new(vec![Letter::T]).concat(&self.encode(c0));
        Ok(self.presentation.power_normalize(&base, n, budget)?.poly.is_zero())
    }
}

/// A uniformly random configuration with at most `max_side` cells on each
/// side of the head.
pub fn random_config<R: Rng>(rng: &mut R, spec: &TmSpec, max_side: usize) -> TmConfig {
    let run = |rng: &mut R| -> Vec<u16> {
        let len = rng.gen_range(0..=max_side);
        (0..len).map(|_| rng.gen_range(0..spec.colors())).collect()
    };
    let left = run(rng);
    let right = run(rng);
    TmConfig::new(
        rng.gen_range(0..spec.states()),
        rng.gen_range(0..spec.colors()),
        left,
        right,
    )
}

/// Draws a test word of length at most `max_len`: half the time a
/// configuration word with clock letters sprinkled in, otherwise uniform
/// letters from the presentation's alphabet.
pub fn sample_word<R: Rng>(
    rng: &mut R,
    spec: &TmSpec,
    construction: Construction,
    max_len: usize,
) -> Word {
    let alphabet = construction.alphabet(spec).letters();
    if max_len >= 4 && rng.gen_bool(0.5) {
        let tape = rng.gen_range(0..=max_len - 4);
        let left = rng.gen_range(0..=tape);
        let c = TmConfig::new(
            rng.gen_range(0..spec.states()),
            rng.gen_range(0..spec.colors()),
            (0..left).map(|_| rng.gen_range(0..spec.colors())).collect(),
            (0..tape - left).map(|_| rng.gen_range(0..spec.colors())).collect(),
        );
        let mut letters = encode_config(&c, construction).into_letters();
        let clocks: &[Letter] = match construction {
            Construction::Nilpotency => &[Letter::T],
            Construction::ZeroDivisor => &[Letter::T, Letter::S],
        };
        let extra = rng.gen_range(0..=max_len - letters.len());
        for _ in 0..extra {
            let at = rng.gen_range(0..=letters.len());
            letters.insert(at, *clocks.choose(rng).expect("nonempty"));
        }
        Word::new(letters)
    } else {
        let len = rng.gen_range(1..=max_len.max(1));
        (0..len)
            .map(|_| *alphabet.choose(rng).expect("nonempty alphabet"))
            .collect()
    }
}

/// Words whose leftmost and rightmost normal forms differ.
pub fn confluence_probe(
    machine: &EncodedMachine,
    samples: usize,
    max_len: usize,
    seed: u64,
    budget: usize,
) -> Result<Vec<Word>> {
    use crate::rewrite::Strategy;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = (0..samples)
        .map(|_| sample_word(&mut rng, machine.spec(), machine.construction(), max_len))
        .collect();
    let p = machine.presentation();
    let verdicts = words
        .par_iter()
        .map(|w| {
            let left = p.normalize_word_with(w, Strategy::Leftmost, budget)?.0;
            let right = p.normalize_word_with(w, Strategy::Rightmost, budget)?.0;
            Ok((left != right).then(|| w.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(verdicts.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConservationViolation {
    pub rule: usize,
    pub host: Word,
    pub before: usize,
    pub after: usize,
}

/// Applies random non-zero rules inside random host words and checks that
/// the clock count is preserved: `deg_t` for the nilpotency construction,
/// `deg_t + deg_s` for the zero-divisor one.
pub fn conservation_probe(
    machine: &EncodedMachine,
    trials: usize,
    max_context: usize,
    seed: u64,
) -> Vec<ConservationViolation> {
    let p = machine.presentation();
    let invariant = match machine.construction() {
        Construction::Nilpotency => deg_t,
        Construction::ZeroDivisor => htilde,
    };
    let candidates: Vec<usize> = (0..p.rules().len())
        .filter(|&id| !p.rule(id).rhs.is_zero())
        .collect();
    let letters = p.alphabet().letters();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if candidates.is_empty() {
        return out;
    }
    for _ in 0..trials {
        let rule = *candidates.choose(&mut rng).expect("nonempty");
        let context = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
            let len = rng.gen_range(0..=max_context);
            (0..len).map(|_| *letters.choose(rng).expect("nonempty")).collect()
        };
        let prefix = context(&mut rng);
        let suffix = context(&mut rng);
        let mut host = prefix.clone();
        host.extend_from_slice(&p.rule(rule).lhs);
        host.extend_from_slice(&suffix);
        let reduct = p.apply(
            &host,
            crate::matcher::Redex {
                pos: prefix.len(),
                rule,
            },
        );
        let before = invariant(&host);
        let after = reduct.word().map_or(usize::MAX, |w| invariant(w));
        if before != after {
            out.push(ConservationViolation {
                rule,
                host: Word::new(host),
                before,
                after,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationViolation {
    pub word: Word,
    pub power: usize,
    /// `Right` for `X t^n`, `Left` for `s^n X`.
    pub side: Side,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CancellationReport {
    pub tested: usize,
    /// Samples dropped because they already vanish.
    pub skipped_zero: usize,
    pub violations: Vec<CancellationViolation>,
}

/// Checks right cancellation of `t` and left cancellation of `s` in the
/// zero-divisor presentation: for sampled `X != 0`, neither `X t^n` nor
/// `s^n X` may vanish, `n = 1, 2, 3`.
pub fn cancellation_probe(
    machine: &EncodedMachine,
    samples: usize,
    max_len: usize,
    seed: u64,
    budget: usize,
) -> Result<CancellationReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = (0..samples)
        .map(|_| sample_word(&mut rng, machine.spec(), machine.construction(), max_len))
        .collect();
    let p = machine.presentation();
    let results = words
        .par_iter()
        .map(|x| -> Result<Option<Vec<CancellationViolation>>> {
            let x_poly = Polynomial::from(x.clone());
            if p.normalize(&x_poly, budget)?.poly.is_zero() {
                return Ok(None);
            }
            let mut found = Vec::new();
            for n in 1..=3 {
                let ts = Word::new(vec![Letter::T; n]);
                let ss = Word::new(vec![Letter::S; n]);
                if p.normalize_word(&x.concat(&ts), budget)?.0.is_zero() {
                    found.push(CancellationViolation {
                        word: x.clone(),
                        power: n,
                        side: Side::Right,
                    });
                }
                if p.normalize_word(&ss.concat(x), budget)?.0.is_zero() {
                    found.push(CancellationViolation {
                        word: x.clone(),
                        power: n,
                        side: Side::Left,
                    });
                }
            }
            Ok(Some(found))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = CancellationReport::default();
    for r in results {
        match r {
            None => report.skipped_zero += 1,
            Some(found) => {
                report.tested += 1;
                report.violations.extend(found);
            }
        }
    }
    Ok(report)
}
