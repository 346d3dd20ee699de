//! Lexicon-and-rule sentiment scoring.
//!
//! Valences come from data/sentiment_lexicon.tsv (entries in [-4, 4]).
//! Rules run in a fixed order per scored token: degree booster on the
//! immediately preceding token, negation within the three preceding tokens
//! (valence x -0.74), ALL-CAPS emphasis (+-0.733 in mixed-case text), then
//! clause-level `but` reweighting (pre x0.5, post x1.5) and exclamation
//! amplification (+-0.292 per `!`, capped at three). The compound score is
//! s / sqrt(s^2 + 15), clamped to [-1, 1].

use std::collections::HashMap;
use std::fmt;

use once_cell::sync::Lazy;

use crate::corpus::Document;
use crate::nlp::{split_sentence_spans, tokenize};

const BOOST: f64 = 0.293;
const CAPS_BOOST: f64 = 0.733;
const NEGATION_SCALAR: f64 = -0.74;
const EXCLAIM_BOOST: f64 = 0.292;
const MAX_EXCLAIM: usize = 3;
const NORMALIZATION_ALPHA: f64 = 15.0;
const LABEL_THRESHOLD: f64 = 0.05;

const NEGATORS: &[&str] = &[
    "not", "n't", "never", "no", "none", "nobody", "nothing", "neither", "nor",
    "nowhere", "cannot", "without", "rarely", "seldom", "despite", "lack",
    "lacking", "lacks",
];

const INTENSIFIERS: &[&str] = &[
    "absolutely", "amazingly", "awfully", "completely", "considerably",
    "decidedly", "deeply", "enormously", "entirely", "especially",
    "exceptionally", "extremely", "fabulously", "highly", "hugely",
    "incredibly", "intensely", "majorly", "more", "most", "particularly",
    "purely", "quite", "really", "remarkably", "so", "substantially",
    "thoroughly", "totally", "tremendously", "uber", "unbelievably",
    "unusually", "utterly", "very",
];

const DAMPENERS: &[&str] = &[
    "almost", "barely", "hardly", "just", "kind", "kinda", "less", "little",
    "marginally", "occasionally", "partly", "scarcely", "slightly", "somewhat",
    "sort", "sorta",
];

static VALENCES: Lazy<HashMap<String, f64>> = Lazy::new(|| {
    let raw = include_str!("../data/sentiment_lexicon.tsv");
    let mut map = HashMap::new();
    for line in raw.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split('\t');
        let token = parts.next().unwrap_or_default();
        let valence: f64 = parts
            .next()
            .and_then(|v| v.parse().ok())
            .unwrap_or_else(|| panic!("sentiment_lexicon.tsv: bad entry '{line}'"));
        assert!((-4.0..=4.0).contains(&valence), "valence out of range: {line}");
        map.insert(token.to_string(), valence);
    }
    map
});

/// Bundled valence for a token, if any. Exposed for tests and tooling.
pub fn lexicon_valence(token: &str) -> Option<f64> {
    VALENCES.get(token).copied()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SentimentScore {
    pub pos: f64,
    pub neg: f64,
    pub neu: f64,
    pub compound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SentimentLabel {
    Pos,
    Neg,
    Neu,
}

impl SentimentLabel {
    pub fn parse(s: &str) -> Option<SentimentLabel> {
        match s {
            "pos" => Some(SentimentLabel::Pos),
            "neg" => Some(SentimentLabel::Neg),
            "neu" => Some(SentimentLabel::Neu),
            _ => None,
        }
    }
}

impl fmt::Display for SentimentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SentimentLabel::Pos => "pos",
            SentimentLabel::Neg => "neg",
            SentimentLabel::Neu => "neu",
        })
    }
}

pub fn label(score: &SentimentScore) -> SentimentLabel {
    if score.compound >= LABEL_THRESHOLD {
        SentimentLabel::Pos
    } else if score.compound <= -LABEL_THRESHOLD {
        SentimentLabel::Neg
    } else {
        SentimentLabel::Neu
    }
}

fn is_all_caps(word: &str) -> bool {
    let mut letters = 0;
    for c in word.chars() {
        if c.is_alphabetic() {
            letters += 1;
            if !c.is_uppercase() {
                return false;
            }
        }
    }
    letters > 1
}

fn booster_scalar(word_lower: &str) -> Option<f64> {
    if INTENSIFIERS.contains(&word_lower) {
        Some(BOOST)
    } else if DAMPENERS.contains(&word_lower) {
        Some(-BOOST)
    } else {
        None
    }
}

pub fn score_text(text: &str) -> SentimentScore {
    let words: Vec<String> = tokenize(text)
        .into_iter()
        .map(|t| t.surface)
        .filter(|s| s.chars().any(|c| c.is_alphanumeric()))
        .collect();
    let lowered: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();

    let caps_count = words.iter().filter(|w| is_all_caps(w)).count();
    let mixed_case = caps_count > 0 && caps_count < words.len();

    let mut valences = vec![0.0_f64; words.len()];
    for i in 0..words.len() {
        if booster_scalar(&lowered[i]).is_some() {
            continue; // boosters carry no valence of their own
        }
        let Some(&base) = VALENCES.get(&lowered[i]) else {
            continue;
        };
        let mut v = base;
        if i > 0 {
            if let Some(mut scalar) = booster_scalar(&lowered[i - 1]) {
                if v < 0.0 {
                    scalar = -scalar;
                }
                if is_all_caps(&words[i - 1]) && mixed_case {
                    scalar += CAPS_BOOST * scalar.signum();
                }
                v += scalar;
            }
        }
        let negated = (i.saturating_sub(3)..i).any(|j| NEGATORS.contains(&lowered[j].as_str()));
        if negated {
            v *= NEGATION_SCALAR;
        }
        if is_all_caps(&words[i]) && mixed_case {
            v += CAPS_BOOST * v.signum();
        }
        valences[i] = v;
    }

    if let Some(but_idx) = lowered.iter().position(|w| w == "but") {
        for (i, v) in valences.iter_mut().enumerate() {
            if i < but_idx {
                *v *= 0.5;
            } else if i > but_idx {
                *v *= 1.5;
            }
        }
    }

    let mut s: f64 = valences.iter().sum();
    if s != 0.0 {
        let exclaims = text.chars().filter(|&c| c == '!').count().min(MAX_EXCLAIM);
        let amplifier = exclaims as f64 * EXCLAIM_BOOST;
        s += amplifier * s.signum();
    }
    let compound = (s / (s * s + NORMALIZATION_ALPHA).sqrt()).clamp(-1.0, 1.0);

    let mut pos_mass = 0.0;
    let mut neg_mass = 0.0;
    let mut neu_mass = 0.0;
    for &v in &valences {
        if v > 0.0 {
            pos_mass += v + 1.0;
        } else if v < 0.0 {
            neg_mass += v.abs() + 1.0;
        } else {
            neu_mass += 1.0;
        }
    }
    let total = pos_mass + neg_mass + neu_mass;
    if total == 0.0 {
        SentimentScore {
            pos: 0.0,
            neg: 0.0,
            neu: 1.0,
            compound,
        }
    } else {
        SentimentScore {
            pos: pos_mass / total,
            neg: neg_mass / total,
            neu: neu_mass / total,
            compound,
        }
    }
}

pub fn score_document(document: &Document) -> SentimentScore {
    score_text(&document.text)
}

pub fn score_sentences(document: &Document) -> Vec<(String, SentimentScore)> {
    split_sentence_spans(&document.text)
        .into_iter()
        .map(|(s, e)| {
            let sentence = &document.text[s..e];
            (sentence.to_string(), score_text(sentence))
        })
        .collect()
}

/// Label a document by its whole-text compound score.
pub fn document_label(document: &Document) -> SentimentLabel {
    label(&score_document(document))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compound(text: &str) -> f64 {
        score_text(text).compound
    }

    #[test]
    fn empty_text_is_exactly_neutral() {
        let s = score_text("");
        assert_eq!((s.pos, s.neg, s.neu, s.compound), (0.0, 0.0, 1.0, 0.0));
    }

    #[test]
    fn no_lexicon_hits_is_exactly_neutral() {
        let s = score_text("table chair stone");
        assert_eq!((s.pos, s.neg, s.neu, s.compound), (0.0, 0.0, 1.0, 0.0));
    }

    #[test]
    fn single_word_matches_the_closed_form() {
        for word in ["love", "hate", "great", "terrible", "happy"] {
            let v = lexicon_valence(word).unwrap();
            let expected = v / (v * v + 15.0).sqrt();
            assert!((compound(word) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn shares_sum_to_one_when_tokens_scored() {
        let s = score_text("the food was great but the service was terrible");
        assert!((s.pos + s.neg + s.neu - 1.0).abs() < 1e-9);
        assert!(s.pos > 0.0 && s.neg > 0.0);
    }

    #[test]
    fn negation_flips_and_shrinks() {
        let plain = compound("good");
        let negated = compound("not good");
        assert!(plain > 0.0);
        assert!(negated < 0.0);
        assert!(negated.abs() < plain.abs());
        assert!(compound("do n't love it") < compound("love it"));
    }

    #[test]
    fn negation_window_is_three_tokens() {
        assert!(compound("not at all good") < 0.0); // distance 3
        assert!(compound("not sure it was any good") > 0.0); // distance 5
    }

    #[test]
    fn boosters_apply_to_the_next_token_only() {
        assert!(compound("very good") > compound("good"));
        assert!(compound("slightly good") < compound("good"));
        // booster separated from the lexicon word has no effect
        assert_eq!(compound("very tall good"), compound("tall good"));
    }

    #[test]
    fn caps_emphasis_needs_mixed_case() {
        assert!(compound("it was GREAT news") > compound("it was great news"));
        assert!((compound("GREAT") - compound("great")).abs() < 1e-12);
    }

    #[test]
    fn but_clause_reweights() {
        let balanced = score_text("the room was great yet the food was awful");
        let but = score_text("the room was great but the food was awful");
        assert!(but.compound < balanced.compound);
    }

    #[test]
    fn exclamations_amplify_up_to_three() {
        let base = compound("good");
        let one = compound("good!");
        let two = compound("good!!");
        let three = compound("good!!!");
        let four = compound("good!!!!");
        assert!(base < one && one < two && two < three);
        assert_eq!(three, four);
        // negative side amplifies in magnitude
        assert!(compound("bad!").abs() > compound("bad").abs());
        // no effect when nothing scored
        assert_eq!(compound("table!"), 0.0);
    }

    #[test]
    fn labels_use_inclusive_thresholds() {
        let mk = |compound| SentimentScore { pos: 0.0, neg: 0.0, neu: 1.0, compound };
        assert_eq!(label(&mk(0.0)), SentimentLabel::Neu);
        assert_eq!(label(&mk(0.05)), SentimentLabel::Pos);
        assert_eq!(label(&mk(-0.05)), SentimentLabel::Neg);
        assert_eq!(label(&mk(-0.051)), SentimentLabel::Neg);
        assert_eq!(label(&mk(0.049)), SentimentLabel::Neu);
    }

    #[test]
    fn sentence_scores_keep_document_order() {
        let doc = Document {
            title: "T".into(),
            text: "I love it. I hate it.".into(),
            source_order: 0,
        };
        let scored = score_sentences(&doc);
        assert_eq!(scored.len(), 2);
        assert!(scored[0].1.compound > 0.0);
        assert!(scored[1].1.compound < 0.0);
        // a one-sentence document scores like the whole document
        let single = Document {
            title: "S".into(),
            text: "I love it.".into(),
            source_order: 0,
        };
        assert_eq!(score_sentences(&single)[0].1, score_document(&single));
    }
}
