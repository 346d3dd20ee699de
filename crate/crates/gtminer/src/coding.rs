//! Grounded-theory coding analytics over an annotated corpus: open-coding
//! categories (repeated content verbs), the axial coding dictionary
//! (category -> co-occurring noun properties -> adjective/adverb
//! dimensions), subject-verb-object triads, extractive summaries and
//! entity concepts.

use std::collections::HashMap;

use crate::nlp::{extract_entities, is_stopword, AnnotatedCorpus, PosTag, Sentence};

/// Token-position window for dimension adjacency.
const DIMENSION_WINDOW: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Property {
    pub noun_lemma: String,
    pub cooccurrence: usize,
    pub dimensions: Vec<(String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Category {
    pub verb_lemma: String,
    pub count: usize,
    pub properties: Vec<Property>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodingDictionary {
    pub categories: Vec<Category>,
    pub documents: usize,
    pub sentences: usize,
    pub tokens: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triad {
    pub subject: String,
    pub verb: String,
    pub object: Option<String>,
    pub sentence_span: (usize, usize),
}

fn ranked(counts: HashMap<String, usize>) -> Vec<(String, usize)> {
    let mut out: Vec<(String, usize)> = counts.into_iter().collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Top content-verb lemmas by corpus-wide count. Auxiliaries are excluded
/// by tag; stopword verbs are excluded by lemma.
pub fn top_categories(corpus: &AnnotatedCorpus, n: usize) -> Vec<(String, usize)> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for tok in corpus.tokens() {
        if tok.pos == PosTag::Verb && !is_stopword(&tok.lemma) {
            *counts.entry(tok.lemma.clone()).or_insert(0) += 1;
        }
    }
    let mut out = ranked(counts);
    out.truncate(n);
    out
}

/// Build the category -> property -> dimension dictionary.
///
/// For every sentence containing a category verb, each NOUN/PROPN token
/// counts once toward that noun lemma's co-occurrence. A property's
/// dimensions collect ADJ tokens within two positions of each counted noun
/// instance and ADV tokens within two positions of any category-verb
/// instance in the same sentence, merged by lemma.
pub fn build_coding_dictionary(
    corpus: &AnnotatedCorpus,
    n_categories: usize,
    n_properties: usize,
    n_dimensions: usize,
) -> CodingDictionary {
    let categories = top_categories(corpus, n_categories)
        .into_iter()
        .map(|(verb_lemma, count)| {
            let mut cooccurrence: HashMap<String, usize> = HashMap::new();
            let mut dimensions: HashMap<String, HashMap<String, usize>> = HashMap::new();
            for sentence in corpus.sentences() {
                accumulate_properties(sentence, &verb_lemma, &mut cooccurrence, &mut dimensions);
            }
            let properties = ranked(cooccurrence)
                .into_iter()
                .take(n_properties)
                .map(|(noun_lemma, count)| {
                    let mut dims = ranked(dimensions.remove(&noun_lemma).unwrap_or_default());
                    dims.truncate(n_dimensions);
                    Property {
                        noun_lemma,
                        cooccurrence: count,
                        dimensions: dims,
                    }
                })
                .collect();
            Category {
                verb_lemma,
                count,
                properties,
            }
        })
        .collect();

    CodingDictionary {
        categories,
        documents: corpus.documents.len(),
        sentences: corpus.sentence_count(),
        tokens: corpus.token_count(),
    }
}

fn accumulate_properties(
    sentence: &Sentence,
    verb_lemma: &str,
    cooccurrence: &mut HashMap<String, usize>,
    dimensions: &mut HashMap<String, HashMap<String, usize>>,
) {
    let verb_positions: Vec<usize> = sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.pos == PosTag::Verb && t.lemma == verb_lemma)
        .map(|(i, _)| i)
        .collect();
    if verb_positions.is_empty() {
        return;
    }
    let near = |i: usize, j: usize| i.abs_diff(j) <= DIMENSION_WINDOW;
    // adverb tokens near any instance of the category verb
    let verb_adverbs: Vec<&str> = sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(j, t)| t.pos == PosTag::Adv && verb_positions.iter().any(|&p| near(*j, p)))
        .map(|(_, t)| t.lemma.as_str())
        .collect();

    for (k, noun) in sentence.tokens.iter().enumerate() {
        if !matches!(noun.pos, PosTag::Noun | PosTag::Propn) {
            continue;
        }
        *cooccurrence.entry(noun.lemma.clone()).or_insert(0) += 1;
        let dims = dimensions.entry(noun.lemma.clone()).or_default();
        for (j, adj) in sentence.tokens.iter().enumerate() {
            if adj.pos == PosTag::Adj && near(j, k) {
                *dims.entry(adj.lemma.clone()).or_insert(0) += 1;
            }
        }
        for adv in &verb_adverbs {
            *dims.entry((*adv).to_string()).or_insert(0) += 1;
        }
    }
}

/// Nearest-neighbour subject-verb-object extraction: for each verb, the
/// subject is the closest preceding NOUN/PROPN/PRON with no verb between,
/// the object the closest following NOUN/PROPN with no verb between. No
/// subject, no triad; the object is optional.
pub fn extract_svo_triads(sentence: &Sentence) -> Vec<Triad> {
    let tokens = &sentence.tokens;
    let mut out = Vec::new();
    for (vi, verb) in tokens.iter().enumerate() {
        if verb.pos != PosTag::Verb {
            continue;
        }
        let mut subject = None;
        for t in tokens[..vi].iter().rev() {
            match t.pos {
                PosTag::Noun | PosTag::Propn | PosTag::Pron => {
                    subject = Some(t.lemma.clone());
                    break;
                }
                PosTag::Verb => break,
                _ => {}
            }
        }
        let Some(subject) = subject else { continue };
        let mut object = None;
        for t in &tokens[vi + 1..] {
            match t.pos {
                PosTag::Noun | PosTag::Propn => {
                    object = Some(t.lemma.clone());
                    break;
                }
                PosTag::Verb => break,
                _ => {}
            }
        }
        out.push(Triad {
            subject,
            verb: verb.lemma.clone(),
            object,
            sentence_span: (sentence.start, sentence.end),
        });
    }
    out
}

/// Extractive summary: a sentence scores the sum of the corpus-wide
/// frequencies of its non-stopword, non-punctuation lemmas divided by its
/// token count. The top `n_sentences` are returned in document order;
/// ties go to the earlier sentence.
pub fn summarize(corpus: &AnnotatedCorpus, n_sentences: usize) -> Vec<String> {
    let mut freq: HashMap<&str, usize> = HashMap::new();
    for tok in corpus.tokens() {
        if tok.pos != PosTag::Punct && !is_stopword(&tok.lemma) {
            *freq.entry(tok.lemma.as_str()).or_insert(0) += 1;
        }
    }

    let mut scored: Vec<(usize, f64, &str)> = Vec::new();
    let mut index = 0;
    for doc in &corpus.documents {
        for sentence in &doc.sentences {
            let total: usize = sentence
                .tokens
                .iter()
                .filter(|t| t.pos != PosTag::Punct && !is_stopword(&t.lemma))
                .map(|t| freq.get(t.lemma.as_str()).copied().unwrap_or(0))
                .sum();
            let score = total as f64 / sentence.tokens.len().max(1) as f64;
            scored.push((index, score, sentence.text(&doc.text)));
            index += 1;
        }
    }

    let mut order: Vec<usize> = (0..scored.len()).collect();
    order.sort_by(|&a, &b| {
        scored[b].1.total_cmp(&scored[a].1).then_with(|| scored[a].0.cmp(&scored[b].0))
    });
    let mut picked: Vec<usize> = order.into_iter().take(n_sentences).collect();
    picked.sort_unstable();
    picked.into_iter().map(|i| scored[i].2.to_string()).collect()
}

/// Entity concepts, counted by lowercased entity text.
pub fn corpus_concepts(corpus: &AnnotatedCorpus, n: usize) -> Vec<(String, usize)> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for sentence in corpus.sentences() {
        for entity in extract_entities(sentence) {
            *counts.entry(entity.text.to_lowercase()).or_insert(0) += 1;
        }
    }
    let mut out = ranked(counts);
    out.truncate(n);
    out
}

/// VERB lemmas of one document; used by the category document filter.
pub fn verb_lemma_set(annotated_doc_sentences: &[Sentence]) -> std::collections::HashSet<String> {
    annotated_doc_sentences
        .iter()
        .flat_map(|s| s.tokens.iter())
        .filter(|t| t.pos == PosTag::Verb)
        .map(|t| t.lemma.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_transcript;
    use crate::nlp::annotate_corpus;

    fn annotate(text: &str) -> AnnotatedCorpus {
        let corpus = parse_transcript(&format!("{text}\n<break>T</break>\n")).unwrap();
        annotate_corpus(&corpus)
    }

    #[test]
    fn lemmas_collapse_categories() {
        let corpus = annotate("He runs. She runs. They ran.");
        assert_eq!(top_categories(&corpus, 5), vec![("run".to_string(), 3)]);
    }

    #[test]
    fn no_verbs_no_categories() {
        let corpus = annotate("Blue sky. Big dog.");
        assert!(top_categories(&corpus, 5).is_empty());
    }

    #[test]
    fn empty_corpus_is_fine() {
        let corpus = AnnotatedCorpus::default();
        assert!(top_categories(&corpus, 3).is_empty());
        let dict = build_coding_dictionary(&corpus, 3, 3, 3);
        assert!(dict.categories.is_empty());
        assert_eq!((dict.documents, dict.sentences, dict.tokens), (0, 0, 0));
    }

    #[test]
    fn adjacency_rule_on_a_single_sentence() {
        let corpus = annotate("The tired patient walks slowly.");
        let dict = build_coding_dictionary(&corpus, 10, 5, 5);
        assert_eq!(dict.categories.len(), 1);
        let cat = &dict.categories[0];
        assert_eq!(cat.verb_lemma, "walk");
        assert_eq!(cat.count, 1);
        assert_eq!(cat.properties.len(), 1);
        let prop = &cat.properties[0];
        assert_eq!(prop.noun_lemma, "patient");
        assert_eq!(prop.cooccurrence, 1);
        assert_eq!(
            prop.dimensions,
            vec![("slowly".to_string(), 1), ("tired".to_string(), 1)]
        );
    }

    #[test]
    fn verbs_without_nouns_have_no_properties() {
        let corpus = annotate("Stop! Go!");
        let dict = build_coding_dictionary(&corpus, 10, 5, 5);
        assert_eq!(dict.categories.len(), 2);
        for cat in &dict.categories {
            assert!(cat.properties.is_empty());
        }
    }

    #[test]
    fn svo_nearest_neighbour() {
        let corpus = annotate("John eats apples.");
        let triads = extract_svo_triads(&corpus.documents[0].sentences[0]);
        assert_eq!(triads.len(), 1);
        assert_eq!(triads[0].subject, "john");
        assert_eq!(triads[0].verb, "eat");
        assert_eq!(triads[0].object.as_deref(), Some("apple"));
    }

    #[test]
    fn no_subject_no_triad() {
        let corpus = annotate("Run!");
        assert!(extract_svo_triads(&corpus.documents[0].sentences[0]).is_empty());
    }

    #[test]
    fn intervening_verb_blocks_the_subject() {
        // "stopped" sits between "nurse" and "spoke", so "spoke" gets no subject
        let corpus = annotate("The nurse stopped and spoke.");
        let triads = extract_svo_triads(&corpus.documents[0].sentences[0]);
        assert_eq!(triads.len(), 1);
        assert_eq!(triads[0].verb, "stop");
        assert_eq!(triads[0].subject, "nurse");
    }

    #[test]
    fn summary_returns_everything_when_n_is_large() {
        let corpus = annotate("Patients walk daily. Nurses help patients.");
        let all = summarize(&corpus, 10);
        assert_eq!(all, vec!["Patients walk daily.", "Nurses help patients."]);
        let single = annotate("One sentence only.");
        assert_eq!(summarize(&single, 3), vec!["One sentence only."]);
    }

    #[test]
    fn summary_is_a_subsequence_in_document_order() {
        let corpus = annotate(
            "Patients walk daily. The dog barked. Patients walk to the clinic daily. Rain fell.",
        );
        let picked = summarize(&corpus, 2);
        assert_eq!(picked.len(), 2);
        let texts: Vec<&str> = corpus.documents[0]
            .sentences
            .iter()
            .map(|s| s.text(&corpus.documents[0].text))
            .collect();
        let mut last = 0;
        for p in &picked {
            let at = texts.iter().position(|t| t == p).unwrap();
            assert!(at >= last);
            last = at;
        }
    }

    #[test]
    fn concepts_count_entities() {
        let corpus = annotate("John met Jane. John left.");
        assert_eq!(
            corpus_concepts(&corpus, 10),
            vec![("john".to_string(), 2), ("jane".to_string(), 1)]
        );
        let none = annotate("the quick brown fox jumped");
        assert!(corpus_concepts(&none, 10).is_empty());
    }
}
