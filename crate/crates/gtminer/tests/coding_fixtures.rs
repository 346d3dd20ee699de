//! Coding-dictionary conformance against a hand computation, a brute-force
//! category counter over generated corpora, and an independent
//! reimplementation of the summary scoring formula.

use std::collections::HashMap;

use gtminer::coding::{build_coding_dictionary, corpus_concepts, summarize, top_categories};
use gtminer::corpus::parse_transcript;
use gtminer::nlp::{annotate_corpus, extract_entities, is_stopword, AnnotatedCorpus, PosTag};
use gtminer::rng::Rng;

/// Ten sentences around five verbs; the whole dictionary below was worked
/// out by hand from the adjacency rules (same-sentence properties, a
/// two-position window for dimensions, punctuation counts as a position).
const DICT_FIXTURE: &str = "\
The tired patient walks slowly.

The nurse walks quickly.

A doctor visits the clinic.

The happy nurse visits patients daily.

Old patients walk carefully.

The clinic opened early.

Nurses help patients.

The patient thanked the calm doctor.

Visits help everyone.

Happy doctors walk home quickly.
";

fn dims(pairs: &[(&str, usize)]) -> Vec<(String, usize)> {
    pairs.iter().map(|(l, c)| (l.to_string(), *c)).collect()
}

#[test]
fn coding_dictionary_matches_the_hand_computation() {
    let corpus = parse_transcript(&format!("{DICT_FIXTURE}<break>T</break>\n")).unwrap();
    let annotated = annotate_corpus(&corpus);
    let dict = build_coding_dictionary(&annotated, 10, 5, 5);

    assert_eq!(dict.documents, 1);
    assert_eq!(dict.sentences, 10);
    assert_eq!(dict.tokens, 55);

    let cats: Vec<(&str, usize)> = dict
        .categories
        .iter()
        .map(|c| (c.verb_lemma.as_str(), c.count))
        .collect();
    assert_eq!(
        cats,
        vec![("walk", 4), ("visit", 3), ("help", 2), ("open", 1), ("thank", 1)]
    );

    let walk = &dict.categories[0];
    let props: Vec<(&str, usize)> = walk
        .properties
        .iter()
        .map(|p| (p.noun_lemma.as_str(), p.cooccurrence))
        .collect();
    assert_eq!(props, vec![("patient", 2), ("doctor", 1), ("home", 1), ("nurse", 1)]);
    assert_eq!(
        walk.properties[0].dimensions,
        dims(&[("carefully", 1), ("old", 1), ("slowly", 1), ("tired", 1)])
    );
    assert_eq!(walk.properties[1].dimensions, dims(&[("happy", 1), ("quickly", 1)]));
    assert_eq!(walk.properties[2].dimensions, dims(&[("quickly", 1)]));
    assert_eq!(walk.properties[3].dimensions, dims(&[("quickly", 1)]));

    let visit = &dict.categories[1];
    let props: Vec<(&str, usize)> = visit
        .properties
        .iter()
        .map(|p| (p.noun_lemma.as_str(), p.cooccurrence))
        .collect();
    assert_eq!(props, vec![("clinic", 1), ("doctor", 1), ("nurse", 1), ("patient", 1)]);
    assert!(visit.properties[0].dimensions.is_empty());
    assert!(visit.properties[1].dimensions.is_empty());
    assert_eq!(visit.properties[2].dimensions, dims(&[("daily", 1), ("happy", 1)]));
    assert_eq!(visit.properties[3].dimensions, dims(&[("daily", 1)]));

    let help = &dict.categories[2];
    let props: Vec<(&str, usize)> = help
        .properties
        .iter()
        .map(|p| (p.noun_lemma.as_str(), p.cooccurrence))
        .collect();
    assert_eq!(props, vec![("nurse", 1), ("patient", 1)]);
    assert!(help.properties.iter().all(|p| p.dimensions.is_empty()));

    let open = &dict.categories[3];
    assert_eq!(open.properties.len(), 1);
    assert_eq!(open.properties[0].noun_lemma, "clinic");
    assert_eq!(open.properties[0].dimensions, dims(&[("early", 1)]));

    let thank = &dict.categories[4];
    let props: Vec<(&str, usize)> = thank
        .properties
        .iter()
        .map(|p| (p.noun_lemma.as_str(), p.cooccurrence))
        .collect();
    assert_eq!(props, vec![("doctor", 1), ("patient", 1)]);
    assert_eq!(thank.properties[0].dimensions, dims(&[("calm", 1)]));
    assert!(thank.properties[1].dimensions.is_empty());
}

const WORD_POOL: &[&str] = &[
    "patients", "walk", "nurses", "help", "the", "doctor", "visited", "clinic",
    "slowly", "happy", "stress", "described", "symptoms", "they", "she", "ran",
    "running", "daily", "felt", "tired", "sleep", "was", "and", "pain", "家",
    "Zorblatt", "42", "don't", "improved", "a", "medication", "caused",
];

fn random_corpus(seed: u64) -> AnnotatedCorpus {
    let mut rng = Rng::new(seed);
    let mut raw = String::new();
    for d in 0..(2 + rng.below(4)) {
        for _ in 0..(2 + rng.below(6)) {
            let words: Vec<&str> = (0..(3 + rng.below(9)))
                .map(|_| WORD_POOL[rng.below(WORD_POOL.len())])
                .collect();
            raw.push_str(&words.join(" "));
            raw.push_str(".\n\n");
        }
        raw.push_str(&format!("<break>D{d}</break>\n"));
    }
    annotate_corpus(&parse_transcript(&raw).unwrap())
}

/// Independent counter: walk every token, tally VERB lemmas, sort.
fn brute_force_verb_counts(corpus: &AnnotatedCorpus, n: usize) -> Vec<(String, usize)> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for doc in &corpus.documents {
        for sentence in &doc.sentences {
            for tok in &sentence.tokens {
                if tok.pos == PosTag::Verb && !is_stopword(&tok.lemma) {
                    *counts.entry(tok.lemma.clone()).or_insert(0) += 1;
                }
            }
        }
    }
    let mut pairs: Vec<(String, usize)> = counts.into_iter().collect();
    pairs.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    pairs.truncate(n);
    pairs
}

#[test]
fn categories_match_the_brute_force_counter_on_fifty_corpora() {
    for seed in 0..50 {
        let corpus = random_corpus(seed);
        for n in [1, 5, 100] {
            assert_eq!(
                top_categories(&corpus, n),
                brute_force_verb_counts(&corpus, n),
                "seed {seed}, n {n}"
            );
        }
    }
}

const SUMMARY_FIXTURE: &str = "\
Patients described constant stress at work. The clinic opened late again.
Nurses helped patients manage their medication. A cold rain fell outside.
Many patients walk daily to reduce stress. The parking lot stayed empty.
Doctors explained the medication schedule to patients. Someone lost a glove.
Stress and medication worried most patients. The hallway lights flickered.
Families support patients through long treatment. The vending machine broke.
";

/// Independent reimplementation of the scoring formula: corpus-wide lemma
/// frequencies over non-stopword, non-punctuation tokens; sentence score is
/// the frequency sum divided by the full token count.
fn oracle_summary(corpus: &AnnotatedCorpus, n: usize) -> Vec<String> {
    let mut freq: HashMap<String, usize> = HashMap::new();
    for doc in &corpus.documents {
        for s in &doc.sentences {
            for t in &s.tokens {
                if t.pos != PosTag::Punct && !is_stopword(&t.lemma) {
                    *freq.entry(t.lemma.clone()).or_insert(0) += 1;
                }
            }
        }
    }
    let mut rows: Vec<(usize, f64, String)> = Vec::new();
    let mut idx = 0;
    for doc in &corpus.documents {
        for s in &doc.sentences {
            let mut sum = 0usize;
            for t in &s.tokens {
                if t.pos != PosTag::Punct && !is_stopword(&t.lemma) {
                    sum += freq[&t.lemma];
                }
            }
            rows.push((idx, sum as f64 / s.tokens.len() as f64, s.text(&doc.text).to_string()));
            idx += 1;
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&a, &b| rows[b].1.total_cmp(&rows[a].1).then(rows[a].0.cmp(&rows[b].0)));
    let mut picked: Vec<usize> = order.into_iter().take(n).collect();
    picked.sort_unstable();
    picked.into_iter().map(|i| rows[i].2.clone()).collect()
}

#[test]
fn summary_matches_the_independent_scorer() {
    let corpus = parse_transcript(&format!("{SUMMARY_FIXTURE}<break>T</break>\n")).unwrap();
    let annotated = annotate_corpus(&corpus);
    assert_eq!(annotated.sentence_count(), 12);
    for n in 1..=12 {
        assert_eq!(summarize(&annotated, n), oracle_summary(&annotated, n), "n = {n}");
    }
}

#[test]
fn concepts_match_a_brute_force_entity_tally() {
    let corpus = parse_transcript(
        "We met Jacob near the clinic. Jacob thanked Hannah. Later Hannah called Jacob again.\n<break>P1</break>\nHannah visited Toronto last spring.\n<break>P2</break>\n",
    )
    .unwrap();
    let annotated = annotate_corpus(&corpus);

    let mut tally: HashMap<String, usize> = HashMap::new();
    for doc in &annotated.documents {
        for s in &doc.sentences {
            for e in extract_entities(s) {
                *tally.entry(e.text.to_lowercase()).or_insert(0) += 1;
            }
        }
    }
    let mut expected: Vec<(String, usize)> = tally.into_iter().collect();
    expected.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

    assert_eq!(corpus_concepts(&annotated, 100), expected);
    // ties break by text ascending
    assert_eq!(
        corpus_concepts(&annotated, 2),
        vec![("hannah".to_string(), 3), ("jacob".to_string(), 3)]
    );
}
