//! Romanized Tamil phoneme inventory, tokenization, and shape queries.
//!
//! The alphabet is a case-sensitive ASCII romanization: twelve vowels
//! (`a A i I u U e E ai o O au`) and eighteen consonants
//! (`k ng c nj T N t n p m y r l v zh L R n2`). Uppercase marks long
//! vowels and retroflex consonants. Six symbols are multigraphs
//! (`ng`, `nj`, `ai`, `au`, `zh`, `n2`); the tokenizer resolves them by
//! longest match, so every well-formed surface string has exactly one
//! reading.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised by alphabet queries, tokenization, and word construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhonologyError {
    /// No symbol in the alphabet matches the input at this byte offset.
    #[error("unknown symbol at byte {position}")]
    UnknownSymbol { position: usize },
    /// Tokenization was handed an empty string.
    #[error("cannot tokenize an empty string")]
    EmptyInput,
    /// A word must carry at least one phoneme.
    #[error("a word needs at least one phoneme")]
    EmptyWord,
    /// The phoneme sequence does not survive a render/tokenize round trip
    /// (for example `a` followed by `i`, which renders as the diphthong `ai`).
    #[error("phoneme sequence is ambiguous when rendered as {rendered:?}")]
    AmbiguousRendering { rendered: String },
    /// A vowel-only query was made on a consonant.
    #[error("'{}' is not a vowel", .0.symbol())]
    NotAVowel(Phoneme),
    /// A consonant-only query was made on a vowel.
    #[error("'{}' is not a consonant", .0.symbol())]
    NotAConsonant(Phoneme),
}

/// One phoneme of the romanized alphabet.
///
/// Variant order fixes [`Phoneme::index`], which downstream feature
/// encodings and model files rely on; append-only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phoneme {
    // Vowels.
    A,
    LongA,
    I,
    LongI,
    U,
    LongU,
    E,
    LongE,
    Ai,
    O,
    LongO,
    Au,
    // Consonants.
    K,
    Ng,
    C,
    Nj,
    RetroT,
    RetroN,
    T,
    N,
    P,
    M,
    Y,
    R,
    L,
    V,
    Zh,
    RetroL,
    AlveolarR,
    AlveolarN,
}

/// Whether a vowel is articulated at the front or the back of the mouth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frontness {
    Front,
    Back,
}

/// Vowel quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VowelLength {
    Short,
    Long,
    Diphthong,
}

/// Frontness and length of a vowel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VowelClass {
    pub frontness: Frontness,
    pub length: VowelLength,
}

/// Traditional consonant class: plosive (vallinam), nasal (mellinam),
/// or medial glide/liquid (idaiyinam).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Manner {
    Plosive,
    Nasal,
    Medial,
}

use Phoneme::*;

impl Phoneme {
    /// Every phoneme, in [`Phoneme::index`] order.
    pub const ALL: [Phoneme; 30] = [
        A, LongA, I, LongI, U, LongU, E, LongE, Ai, O, LongO, Au, K, Ng, C, Nj, RetroT, RetroN, T,
        N, P, M, Y, R, L, V, Zh, RetroL, AlveolarR, AlveolarN,
    ];

    /// Stable position of this phoneme in [`Phoneme::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    /// The romanized spelling of this phoneme.
    pub fn symbol(self) -> &'static str {
        match self {
            A => "a",
            LongA => "A",
            I => "i",
            LongI => "I",
            U => "u",
            LongU => "U",
            E => "e",
            LongE => "E",
            Ai => "ai",
            O => "o",
            LongO => "O",
            Au => "au",
            K => "k",
            Ng => "ng",
            C => "c",
            Nj => "nj",
            RetroT => "T",
            RetroN => "N",
            T => "t",
            N => "n",
            P => "p",
            M => "m",
            Y => "y",
            R => "r",
            L => "l",
            V => "v",
            Zh => "zh",
            RetroL => "L",
            AlveolarR => "R",
            AlveolarN => "n2",
        }
    }

    /// Look a phoneme up by its exact romanized spelling.
    pub fn from_symbol(symbol: &str) -> Option<Phoneme> {
        Phoneme::ALL.iter().copied().find(|p| p.symbol() == symbol)
    }

    pub fn is_vowel(self) -> bool {
        (self as usize) < 12
    }

    pub fn is_consonant(self) -> bool {
        !self.is_vowel()
    }

    /// Frontness and length, for vowels.
    pub fn vowel_class(self) -> Result<VowelClass, PhonologyError> {
        if self.is_consonant() {
            return Err(PhonologyError::NotAVowel(self));
        }
        let frontness = match self {
            I | LongI | E | LongE | Ai => Frontness::Front,
            _ => Frontness::Back,
        };
        let length = match self {
            A | I | U | E | O => VowelLength::Short,
            LongA | LongI | LongU | LongE | LongO => VowelLength::Long,
            _ => VowelLength::Diphthong,
        };
        Ok(VowelClass { frontness, length })
    }

    /// Consonant class, for consonants.
    pub fn manner(self) -> Result<Manner, PhonologyError> {
        if self.is_vowel() {
            return Err(PhonologyError::NotAConsonant(self));
        }
        Ok(match self {
            K | C | RetroT | T | P | AlveolarR => Manner::Plosive,
            Ng | Nj | RetroN | N | M | AlveolarN => Manner::Nasal,
            _ => Manner::Medial,
        })
    }

    /// True exactly for the six plosives `k c T t p R`.
    pub fn is_plosive(self) -> Result<bool, PhonologyError> {
        Ok(self.manner()? == Manner::Plosive)
    }

    /// True for vowels that are short (single-mora).
    pub fn is_short_vowel(self) -> bool {
        matches!(
            self.vowel_class(),
            Ok(VowelClass {
                length: VowelLength::Short,
                ..
            })
        )
    }

    /// True for front vowels.
    pub fn is_front_vowel(self) -> bool {
        matches!(
            self.vowel_class(),
            Ok(VowelClass {
                frontness: Frontness::Front,
                ..
            })
        )
    }

    /// True for back vowels.
    pub fn is_back_vowel(self) -> bool {
        matches!(
            self.vowel_class(),
            Ok(VowelClass {
                frontness: Frontness::Back,
                ..
            })
        )
    }
}

impl fmt::Display for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Token table ordered longest-spelling-first so that a linear scan
/// implements longest-match tokenization.
const TOKENS: [Phoneme; 30] = [
    // Two-byte spellings first.
    Ai, Au, Ng, Nj, Zh, AlveolarN, // Then the single-byte spellings.
    A, LongA, I, LongI, U, LongU, E, LongE, O, LongO, K, C, RetroT, RetroN, T, N, P, M, Y, R, L,
    V, RetroL, AlveolarR,
];

/// A non-empty phoneme sequence whose rendering re-tokenizes to itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Phoneme>);

impl Word {
    /// Build a word from phonemes, rejecting empty sequences and sequences
    /// that do not survive a render/tokenize round trip.
    pub fn from_phonemes(phonemes: Vec<Phoneme>) -> Result<Word, PhonologyError> {
        if phonemes.is_empty() {
            return Err(PhonologyError::EmptyWord);
        }
        let candidate = Word(phonemes);
        let rendered = render(&candidate);
        let reread = tokenize(&rendered)?;
        if reread.0 != candidate.0 {
            return Err(PhonologyError::AmbiguousRendering { rendered });
        }
        Ok(candidate)
    }

    pub fn phonemes(&self) -> &[Phoneme] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The final phoneme; total because words are non-empty.
    pub fn last(&self) -> Phoneme {
        *self.0.last().expect("words are non-empty")
    }

    /// The phoneme `n` positions before the end, if the word is that long
    /// (`from_end(0)` is the final phoneme).
    pub fn from_end(&self, n: usize) -> Option<Phoneme> {
        self.0.len().checked_sub(n + 1).map(|i| self.0[i])
    }

    /// Number of vowels, which equals the syllable count.
    pub fn vowel_count(&self) -> usize {
        self.0.iter().filter(|p| p.is_vowel()).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

impl FromStr for Word {
    type Err = PhonologyError;

    fn from_str(s: &str) -> Result<Word, PhonologyError> {
        tokenize(s)
    }
}

/// Split a romanized string into phonemes by longest match.
pub fn tokenize(text: &str) -> Result<Word, PhonologyError> {
    if text.is_empty() {
        return Err(PhonologyError::EmptyInput);
    }
    let mut phonemes = Vec::with_capacity(text.len());
    let mut position = 0;
    while position < text.len() {
        let rest = &text[position..];
        let token = TOKENS
            .iter()
            .copied()
            .find(|p| rest.starts_with(p.symbol()))
            .ok_or(PhonologyError::UnknownSymbol { position })?;
        phonemes.push(token);
        position += token.symbol().len();
    }
    Ok(Word(phonemes))
}

/// Concatenate the symbols of a word back into its surface string.
pub fn render(word: &Word) -> String {
    word.phonemes().iter().map(|p| p.symbol()).collect()
}

/// The consonant/vowel skeleton of a word: `C` per consonant, `V` per
/// short vowel, `VV` per long vowel or diphthong. `kal` maps to `CVC`
/// while `kAl` maps to `CVVC`, so the string distinguishes short from
/// long nuclei.
pub fn syllable_shape(word: &Word) -> String {
    let mut shape = String::with_capacity(word.len() * 2);
    for p in word.phonemes() {
        match p.vowel_class() {
            Err(_) => shape.push('C'),
            Ok(class) => match class.length {
                VowelLength::Short => shape.push('V'),
                VowelLength::Long | VowelLength::Diphthong => shape.push_str("VV"),
            },
        }
    }
    shape
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        tokenize(s).expect("test word tokenizes")
    }

    #[test]
    fn inventory_has_twelve_vowels_and_eighteen_consonants() {
        let vowels = Phoneme::ALL.iter().filter(|p| p.is_vowel()).count();
        let consonants = Phoneme::ALL.iter().filter(|p| p.is_consonant()).count();
        assert_eq!(vowels, 12);
        assert_eq!(consonants, 18);
    }

    #[test]
    fn exactly_six_plosives() {
        let plosives: Vec<&str> = Phoneme::ALL
            .iter()
            .filter(|p| p.is_plosive().unwrap_or(false))
            .map(|p| p.symbol())
            .collect();
        assert_eq!(plosives, ["k", "c", "T", "t", "p", "R"]);
    }

    #[test]
    fn five_front_and_seven_back_vowels() {
        let front: Vec<&str> = Phoneme::ALL
            .iter()
            .filter(|p| p.is_front_vowel())
            .map(|p| p.symbol())
            .collect();
        let back: Vec<&str> = Phoneme::ALL
            .iter()
            .filter(|p| p.is_back_vowel())
            .map(|p| p.symbol())
            .collect();
        assert_eq!(front, ["i", "I", "e", "E", "ai"]);
        assert_eq!(back, ["a", "A", "u", "U", "o", "O", "au"]);
    }

    #[test]
    fn vowel_class_examples() {
        assert_eq!(
            I.vowel_class().unwrap(),
            VowelClass {
                frontness: Frontness::Front,
                length: VowelLength::Short
            }
        );
        assert_eq!(
            Ai.vowel_class().unwrap(),
            VowelClass {
                frontness: Frontness::Front,
                length: VowelLength::Diphthong
            }
        );
        // `au` patterns with the back vowels.
        assert_eq!(
            Au.vowel_class().unwrap(),
            VowelClass {
                frontness: Frontness::Back,
                length: VowelLength::Diphthong
            }
        );
    }

    #[test]
    fn vowel_and_consonant_queries_reject_the_wrong_kind() {
        assert_eq!(K.vowel_class(), Err(PhonologyError::NotAVowel(K)));
        assert_eq!(A.manner(), Err(PhonologyError::NotAConsonant(A)));
        assert_eq!(A.is_plosive(), Err(PhonologyError::NotAConsonant(A)));
    }

    #[test]
    fn manner_split_is_six_six_six() {
        let count = |m: Manner| {
            Phoneme::ALL
                .iter()
                .filter(|p| p.manner() == Ok(m))
                .count()
        };
        assert_eq!(count(Manner::Plosive), 6);
        assert_eq!(count(Manner::Nasal), 6);
        assert_eq!(count(Manner::Medial), 6);
    }

    #[test]
    fn tokenize_resolves_geminates_and_retroflex_l() {
        assert_eq!(word("pUkkaL").phonemes(), [P, LongU, K, K, A, RetroL]);
    }

    #[test]
    fn tokenize_prefers_the_multigraph() {
        assert_eq!(word("nganam").phonemes(), [Ng, A, N, A, M]);
        assert_eq!(word("ai").phonemes(), [Ai]);
        assert_eq!(word("n2an2i").phonemes(), [AlveolarN, A, AlveolarN, I]);
        assert_eq!(word("azhaku").phonemes(), [A, Zh, A, K, U]);
    }

    #[test]
    fn tokenize_is_case_sensitive() {
        assert_eq!(word("kATu").phonemes(), [K, LongA, RetroT, U]);
        assert_eq!(word("katavu").phonemes(), [K, A, T, A, V, U]);
    }

    #[test]
    fn tokenize_reports_the_failing_byte() {
        assert_eq!(
            tokenize("maxam"),
            Err(PhonologyError::UnknownSymbol { position: 2 })
        );
        assert_eq!(
            tokenize("pUq"),
            Err(PhonologyError::UnknownSymbol { position: 2 })
        );
        assert_eq!(tokenize(""), Err(PhonologyError::EmptyInput));
    }

    #[test]
    fn every_symbol_tokenizes_to_itself() {
        for p in Phoneme::ALL {
            assert_eq!(word(p.symbol()).phonemes(), [p], "symbol {}", p.symbol());
        }
    }

    #[test]
    fn render_then_tokenize_is_identity() {
        for text in [
            "a",
            "au",
            "ai",
            "maram",
            "pUkkaL",
            "nganam",
            "azhaku",
            "kan2n2i",
            "njAn2am",
            "kATTukku",
            "marangkaLukku",
        ] {
            let w = word(text);
            assert_eq!(render(&w), text);
            assert_eq!(tokenize(&render(&w)).unwrap(), w);
        }
    }

    #[test]
    fn ambiguous_sequences_are_rejected_at_construction() {
        // `a` + `i` renders as "ai", which re-tokenizes as the diphthong.
        let err = Word::from_phonemes(vec![K, A, I]).unwrap_err();
        assert_eq!(
            err,
            PhonologyError::AmbiguousRendering {
                rendered: "kai".into()
            }
        );
        assert!(Word::from_phonemes(vec![A, U]).is_err());
        assert!(Word::from_phonemes(vec![]).is_err());
        // The legitimate diphthong reading is fine.
        assert!(Word::from_phonemes(vec![K, Ai]).is_ok());
    }

    #[test]
    fn syllable_shape_distinguishes_short_and_long_nuclei() {
        assert_eq!(syllable_shape(&word("kal")), "CVC");
        assert_eq!(syllable_shape(&word("kAl")), "CVVC");
        assert_eq!(syllable_shape(&word("maram")), "CVCVC");
        assert_eq!(syllable_shape(&word("ai")), "VV");
    }

    #[test]
    fn from_end_and_vowel_count() {
        let w = word("katavu");
        assert_eq!(w.last(), U);
        assert_eq!(w.from_end(0), Some(U));
        assert_eq!(w.from_end(1), Some(V));
        assert_eq!(w.from_end(5), Some(K));
        assert_eq!(w.from_end(6), None);
        assert_eq!(w.vowel_count(), 3);
        assert_eq!(word("kal").vowel_count(), 1);
    }
}
