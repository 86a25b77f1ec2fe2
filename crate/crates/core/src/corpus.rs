//! Deterministic synthetic stem generation for stress-testing the rule
//! engine and the learners at realistic corpus sizes.
//!
//! Stems are drawn from seven phonotactic families chosen so that, once
//! crossed with the standard suffix set, every junction class receives
//! training mass. Shapes are strictly alternating consonant/vowel with
//! optional geminate or nasal-plosive codas — never an initial cluster and
//! never two adjacent vowels — so every stem round-trips through the
//! romanization and the five-slot boundary window stays decisive.
//!
//! Two balance properties matter for the probabilistic learners and are
//! deliberate: every family grows the same kind of interior (see [`body`]),
//! so interior window slots carry as little accidental class signal as the
//! end-anchored window permits, and the no-change class receives only
//! plural junctions, keeping its suffix-slot profile as sharp as that of
//! the classes it competes with.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::phonology::{Phoneme, Word};

use Phoneme::{
    AlveolarR, Au, Ai, C, E, I, K, L, LongA, LongE, LongI, LongO, LongU, M, N, Ng, O, P, R,
    RetroL, RetroN, RetroT, T, U, V, Y, Zh,
};

const ONSETS: [Phoneme; 7] = [K, C, T, P, M, N, V];
/// Interior consonants are sonorants only; plosives are reserved for codas,
/// so a plosive in the window is always coda evidence rather than interior
/// noise.
const MEDIALS: [Phoneme; 9] = [M, N, V, R, L, Y, RetroN, RetroL, Zh];
const SHORT_VOWELS: [Phoneme; 5] = [Phoneme::A, I, U, E, O];
const LONG_VOWELS: [Phoneme; 7] = [LongA, LongI, LongU, LongE, LongO, Ai, Au];
const FRONT_FINALS: [Phoneme; 5] = [I, LongI, E, LongE, Ai];
const BACK_FULL_FINALS: [Phoneme; 6] = [Phoneme::A, LongA, LongU, O, LongO, Au];
/// Finals for the consonant-ended family: the two laterals, so the
/// lateral-specific plural classes keep a workable share even in small
/// corpora.
const FINAL_CONSONANTS: [Phoneme; 2] = [L, RetroL];
/// Plosives that close a stem before the reduced final u. The alveolar
/// trill is excluded: it stays a pre-plosive trigger only, so the shapes of
/// the plain and doubling reduced-u families never blur into one another.
const CODA_PLOSIVES: [Phoneme; 5] = [K, C, RetroT, T, P];
const TRILL_SET: [Phoneme; 3] = [AlveolarR, Zh, Y];

/// The seven stem shapes, weighted toward the proportions of an actual noun
/// lexicon: vowel-final and m-final stems dominate, reduced-u stems are a
/// solid minority, and consonant finals spread over laterals and sonorants.
const FAMILIES: [(Family, u32); 7] = [
    (Family::FrontVowelFinal, 20),
    (Family::BackVowelFinal, 12),
    (Family::FullShortU, 5),
    (Family::OvershortDoubling, 5),
    (Family::OvershortPlain, 5),
    (Family::MFinal, 15),
    (Family::ShortCvc, 8),
];

#[derive(Debug, Clone, Copy)]
enum Family {
    FrontVowelFinal,
    BackVowelFinal,
    FullShortU,
    OvershortDoubling,
    OvershortPlain,
    MFinal,
    ShortCvc,
}

/// Generate `count` distinct stems reproducibly from `seed`.
pub fn generate_stems(count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight_total: u32 = FAMILIES.iter().map(|(_, w)| w).sum();
    let mut seen: HashSet<String> = HashSet::with_capacity(count);
    let mut stems = Vec::with_capacity(count);
    let mut attempts = 0usize;
    let attempt_cap = count.saturating_mul(1000).max(100_000);
    while stems.len() < count && attempts < attempt_cap {
        attempts += 1;
        let mut pick = rng.gen_range(0..weight_total);
        let mut family = Family::FrontVowelFinal;
        for &(candidate, weight) in &FAMILIES {
            if pick < weight {
                family = candidate;
                break;
            }
            pick -= weight;
        }
        let phonemes = build(family, &mut rng);
        let word = Word::from_phonemes(phonemes)
            .expect("generated shapes are alternating and round-trip safe");
        if seen.insert(word.to_string()) {
            stems.push(word);
        }
    }
    assert!(
        stems.len() == count,
        "stem space exhausted after {attempts} attempts: {} of {count}",
        stems.len()
    );
    stems
}

/// Every family grows the same kind of interior — an optional onset plus
/// `pairs` (vowel, medial consonant) couples, with interior vowels mixing
/// short and long — so interior window slots look alike across families;
/// families differ only in the coda that closes the stem.
fn body(rng: &mut ChaCha8Rng, pairs: u8) -> Vec<Phoneme> {
    let mut stem = Vec::new();
    maybe_onset(rng, &mut stem);
    for _ in 0..pairs {
        stem.push(interior_vowel(rng));
        stem.push(*MEDIALS.choose(rng).unwrap());
    }
    stem
}

fn interior_vowel(rng: &mut ChaCha8Rng) -> Phoneme {
    if rng.gen_bool(0.3) {
        *LONG_VOWELS.choose(rng).unwrap()
    } else {
        *SHORT_VOWELS.choose(rng).unwrap()
    }
}

/// Length mixture shared by the open-ended families: mostly two or three
/// syllables, with a thin tail of monosyllables.
fn spread(rng: &mut ChaCha8Rng) -> u8 {
    *[0u8, 1, 1, 2, 2].choose(rng).unwrap()
}

fn build(family: Family, rng: &mut ChaCha8Rng) -> Vec<Phoneme> {
    match family {
        Family::FrontVowelFinal => {
            let pairs = spread(rng);
            let mut stem = body(rng, pairs);
            stem.push(*FRONT_FINALS.choose(rng).unwrap());
            stem
        }
        Family::BackVowelFinal => {
            let pairs = spread(rng);
            let mut stem = body(rng, pairs);
            stem.push(*BACK_FULL_FINALS.choose(rng).unwrap());
            stem
        }
        Family::FullShortU => {
            // (C)V̆Cu — exactly two vowels with a short first vowel, so the
            // final u is a full vowel.
            let mut stem = Vec::new();
            maybe_onset(rng, &mut stem);
            stem.push(*SHORT_VOWELS.choose(rng).unwrap());
            stem.push(*MEDIALS.choose(rng).unwrap());
            stem.push(U);
            stem
        }
        Family::OvershortDoubling => {
            // The plosive before the final u doubles: the symbol before it
            // is a long vowel, a diphthong, or one of the trill set.
            let pairs = rng.gen_range(0..=2);
            let mut stem = body(rng, pairs);
            if rng.gen_bool(0.4) {
                stem.push(*SHORT_VOWELS.choose(rng).unwrap());
                stem.push(*TRILL_SET.choose(rng).unwrap());
            } else {
                stem.push(*LONG_VOWELS.choose(rng).unwrap());
            }
            stem.push(*CODA_PLOSIVES.choose(rng).unwrap());
            stem.push(U);
            stem
        }
        Family::OvershortPlain => {
            let mut stem;
            match rng.gen_range(0..3u8) {
                0 => {
                    // Geminate plosive coda: the repeated symbol blocks
                    // doubling.
                    let pairs = rng.gen_range(0..=2);
                    stem = body(rng, pairs);
                    stem.push(interior_vowel(rng));
                    let plosive = *CODA_PLOSIVES.choose(rng).unwrap();
                    stem.push(plosive);
                    stem.push(plosive);
                }
                1 => {
                    // Nasal-plosive coda.
                    let pairs = rng.gen_range(0..=2);
                    stem = body(rng, pairs);
                    stem.push(interior_vowel(rng));
                    let (nasal, plosive) =
                        *[(N, T), (M, P), (RetroN, RetroT), (Ng, K), (N, C)].choose(rng).unwrap();
                    stem.push(nasal);
                    stem.push(plosive);
                }
                _ => {
                    // A single plosive after a short vowel, with at least
                    // three vowels in all: too long for the full-u shape,
                    // too short a final syllable for doubling.
                    let pairs = rng.gen_range(1..=2);
                    stem = body(rng, pairs);
                    stem.push(*SHORT_VOWELS.choose(rng).unwrap());
                    stem.push(*CODA_PLOSIVES.choose(rng).unwrap());
                }
            }
            stem.push(U);
            stem
        }
        Family::MFinal => {
            let pairs = spread(rng);
            let mut stem = body(rng, pairs);
            stem.push(*SHORT_VOWELS.choose(rng).unwrap());
            stem.push(M);
            stem
        }
        Family::ShortCvc => {
            let mut stem = Vec::new();
            maybe_onset(rng, &mut stem);
            stem.push(*SHORT_VOWELS.choose(rng).unwrap());
            stem.push(*FINAL_CONSONANTS.choose(rng).unwrap());
            stem
        }
    }
}

/// Most stems begin with a consonant; a fifth start on their first vowel.
fn maybe_onset(rng: &mut ChaCha8Rng, stem: &mut Vec<Phoneme>) {
    if rng.gen_bool(0.8) {
        stem.push(*ONSETS.choose(rng).unwrap());
    }
}
