//! Document and corpus annotation: sentence splitting, tokenization,
//! tagging and lemmatization in one pass.

use std::collections::HashSet;

use crate::corpus::Corpus;

use super::lemma::lemmatize;
use super::sentence::split_sentence_spans;
use super::tagger::pos_tag;
use super::tokenize::tokenize;
use super::{PosTag, Sentence, Token};

#[derive(Debug, Clone)]
pub struct AnnotatedDocument {
    pub title: String,
    pub text: String,
    pub source_order: usize,
    pub sentences: Vec<Sentence>,
}

#[derive(Debug, Clone, Default)]
pub struct AnnotatedCorpus {
    pub documents: Vec<AnnotatedDocument>,
}

impl AnnotatedCorpus {
    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.documents.iter().flat_map(|d| d.sentences.iter())
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences().flat_map(|s| s.tokens.iter())
    }

    pub fn sentence_count(&self) -> usize {
        self.documents.iter().map(|d| d.sentences.len()).sum()
    }

    pub fn token_count(&self) -> usize {
        self.sentences().map(|s| s.tokens.len()).sum()
    }
}

/// Annotate raw text: sentence spans, tokens, tags, lemmas. Token spans are
/// byte offsets into `text` itself.
pub fn annotate_text(text: &str) -> Vec<Sentence> {
    split_sentence_spans(text)
        .into_iter()
        .map(|(start, end)| {
            let raw = tokenize(&text[start..end]);
            let tags = pos_tag(&raw);
            let tokens = raw
                .into_iter()
                .zip(tags)
                .map(|(t, pos)| Token {
                    lemma: lemmatize(&t.surface, pos),
                    surface: t.surface,
                    start: start + t.start,
                    end: start + t.end,
                    pos,
                })
                .collect();
            Sentence { start, end, tokens }
        })
        .collect()
}

/// Annotate every document, then retag sentence-initial capitalized tokens
/// as proper nouns when the same word occurs capitalized mid-sentence
/// somewhere in the corpus.
pub fn annotate_corpus(corpus: &Corpus) -> AnnotatedCorpus {
    let mut documents: Vec<AnnotatedDocument> = corpus
        .documents
        .iter()
        .map(|d| AnnotatedDocument {
            title: d.title.clone(),
            text: d.text.clone(),
            source_order: d.source_order,
            sentences: annotate_text(&d.text),
        })
        .collect();

    let mut seen_mid_sentence: HashSet<String> = HashSet::new();
    for doc in &documents {
        for sentence in &doc.sentences {
            for (i, tok) in sentence.tokens.iter().enumerate() {
                if i > 0 && tok.pos == PosTag::Propn && starts_uppercase(&tok.surface) {
                    seen_mid_sentence.insert(tok.surface.to_lowercase());
                }
            }
        }
    }
    for doc in &mut documents {
        for sentence in &mut doc.sentences {
            if let Some(tok) = sentence.tokens.first_mut() {
                if tok.pos != PosTag::Propn && starts_uppercase(&tok.surface) {
                    let lower = tok.surface.to_lowercase();
                    if seen_mid_sentence.contains(&lower) {
                        tok.pos = PosTag::Propn;
                        tok.lemma = lower;
                    }
                }
            }
        }
    }

    AnnotatedCorpus { documents }
}

fn starts_uppercase(surface: &str) -> bool {
    surface.chars().next().is_some_and(|c| c.is_uppercase())
}
