//! Latent Dirichlet Allocation by collapsed Gibbs sampling over a lemma
//! vocabulary.
//!
//! The sampler resamples every token from
//! p(z = k) proportional to (n_dk + alpha) * (n_kv + beta) / (n_k + V*beta)
//! with the token's own count excluded, then reads phi and theta off the
//! final counts with the same smoothing. Sampling order and the seeded
//! generator are fixed, so a fit is reproducible bit for bit.

use std::collections::{HashMap, HashSet};

use crate::nlp::{is_stopword, AnnotatedCorpus, PosTag};
use crate::rng::Rng;

pub const DEFAULT_ITERATIONS: usize = 500;
pub const DEFAULT_BETA: f64 = 0.01;

pub fn default_alpha(k: usize) -> f64 {
    50.0 / k as f64
}

#[derive(Debug, thiserror::Error)]
pub enum TopicError {
    #[error("topic count must be at least 1")]
    ZeroTopics,
    #[error("topic count {k} exceeds vocabulary size {vocabulary}")]
    KTooLarge { k: usize, vocabulary: usize },
    #[error("document-term matrix has no documents or no vocabulary")]
    EmptyMatrix,
    #[error("topic index {index} out of range for {k} topics")]
    BadTopicIndex { index: usize, k: usize },
}

/// Document-term counts over a sorted lemma vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocTermMatrix {
    pub vocabulary: Vec<String>,
    /// docs x vocabulary raw term frequencies.
    pub doc_term_counts: Vec<Vec<usize>>,
    pub doc_titles: Vec<String>,
}

impl DocTermMatrix {
    pub fn docs(&self) -> usize {
        self.doc_term_counts.len()
    }

    pub fn vocab_size(&self) -> usize {
        self.vocabulary.len()
    }

    pub fn total_tokens(&self) -> usize {
        self.doc_term_counts.iter().flatten().sum()
    }
}

/// Count non-stopword, non-punctuation, non-number lemmas that appear in at
/// least `min_doc_freq` documents. Falls back to a document frequency of 1
/// when that leaves nothing and the corpus is non-empty.
pub fn build_doc_term_matrix(corpus: &AnnotatedCorpus, min_doc_freq: usize) -> DocTermMatrix {
    let keep = |pos: PosTag, lemma: &str| {
        !matches!(pos, PosTag::Punct | PosTag::Num) && !is_stopword(lemma)
    };
    let mut doc_freq: HashMap<&str, usize> = HashMap::new();
    for doc in &corpus.documents {
        let mut seen: HashSet<&str> = HashSet::new();
        for tok in doc.sentences.iter().flat_map(|s| s.tokens.iter()) {
            if keep(tok.pos, &tok.lemma) {
                seen.insert(tok.lemma.as_str());
            }
        }
        for lemma in seen {
            *doc_freq.entry(lemma).or_insert(0) += 1;
        }
    }

    let mut vocabulary: Vec<String> = doc_freq
        .iter()
        .filter(|(_, &df)| df >= min_doc_freq)
        .map(|(l, _)| l.to_string())
        .collect();
    if vocabulary.is_empty() && !corpus.documents.is_empty() && min_doc_freq > 1 {
        vocabulary = doc_freq.keys().map(|l| l.to_string()).collect();
    }
    vocabulary.sort_unstable();

    let index: HashMap<&str, usize> = vocabulary
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let doc_term_counts = corpus
        .documents
        .iter()
        .map(|doc| {
            let mut row = vec![0usize; vocabulary.len()];
            for tok in doc.sentences.iter().flat_map(|s| s.tokens.iter()) {
                if keep(tok.pos, &tok.lemma) {
                    if let Some(&v) = index.get(tok.lemma.as_str()) {
                        row[v] += 1;
                    }
                }
            }
            row
        })
        .collect();

    DocTermMatrix {
        vocabulary,
        doc_term_counts,
        doc_titles: corpus.documents.iter().map(|d| d.title.clone()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopicModel {
    pub k: usize,
    /// k x vocabulary topic-word probabilities; rows sum to 1.
    pub phi: Vec<Vec<f64>>,
    /// docs x k document-topic probabilities; rows sum to 1.
    pub theta: Vec<Vec<f64>>,
    /// Final topic label per token instance, grouped by document.
    pub assignments: Vec<Vec<usize>>,
    pub vocabulary: Vec<String>,
    pub seed: u64,
    pub iterations: usize,
}

/// Collapsed Gibbs sampler state. Tests drive `sweep` directly to check
/// invariants between sweeps; `fit_lda` is the plain wrapper.
pub struct GibbsSampler<'a> {
    dtm: &'a DocTermMatrix,
    k: usize,
    alpha: f64,
    beta: f64,
    seed: u64,
    rng: Rng,
    /// token vocab ids per document, in (document, vocab index) order
    tokens: Vec<Vec<usize>>,
    z: Vec<Vec<usize>>,
    n_dk: Vec<Vec<usize>>,
    n_kv: Vec<Vec<usize>>,
    n_k: Vec<usize>,
    sweeps_done: usize,
}

impl<'a> GibbsSampler<'a> {
    pub fn new(
        dtm: &'a DocTermMatrix,
        k: usize,
        seed: u64,
        alpha: f64,
        beta: f64,
    ) -> Result<Self, TopicError> {
        if k == 0 {
            return Err(TopicError::ZeroTopics);
        }
        if dtm.docs() == 0 || dtm.vocab_size() == 0 {
            return Err(TopicError::EmptyMatrix);
        }
        if k > dtm.vocab_size() {
            return Err(TopicError::KTooLarge {
                k,
                vocabulary: dtm.vocab_size(),
            });
        }

        let mut rng = Rng::new(seed);
        let tokens: Vec<Vec<usize>> = dtm
            .doc_term_counts
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(v, &c)| std::iter::repeat(v).take(c))
                    .collect()
            })
            .collect();

        let mut n_dk = vec![vec![0usize; k]; dtm.docs()];
        let mut n_kv = vec![vec![0usize; dtm.vocab_size()]; k];
        let mut n_k = vec![0usize; k];
        let z: Vec<Vec<usize>> = tokens
            .iter()
            .enumerate()
            .map(|(d, doc_tokens)| {
                doc_tokens
                    .iter()
                    .map(|&v| {
                        let topic = rng.below(k);
                        n_dk[d][topic] += 1;
                        n_kv[topic][v] += 1;
                        n_k[topic] += 1;
                        topic
                    })
                    .collect()
            })
            .collect();

        Ok(GibbsSampler {
            dtm,
            k,
            alpha,
            beta,
            seed,
            rng,
            tokens,
            z,
            n_dk,
            n_kv,
            n_k,
            sweeps_done: 0,
        })
    }

    pub fn sweep(&mut self) {
        let v_beta = self.dtm.vocab_size() as f64 * self.beta;
        let mut weights = vec![0.0f64; self.k];
        for d in 0..self.tokens.len() {
            for t in 0..self.tokens[d].len() {
                let v = self.tokens[d][t];
                let old = self.z[d][t];
                self.n_dk[d][old] -= 1;
                self.n_kv[old][v] -= 1;
                self.n_k[old] -= 1;

                let mut total = 0.0;
                for (topic, w) in weights.iter_mut().enumerate() {
                    *w = (self.n_dk[d][topic] as f64 + self.alpha)
                        * (self.n_kv[topic][v] as f64 + self.beta)
                        / (self.n_k[topic] as f64 + v_beta);
                    total += *w;
                }
                let mut u = self.rng.next_f64() * total;
                let mut new = self.k - 1;
                for (topic, w) in weights.iter().enumerate() {
                    u -= *w;
                    if u <= 0.0 {
                        new = topic;
                        break;
                    }
                }

                self.z[d][t] = new;
                self.n_dk[d][new] += 1;
                self.n_kv[new][v] += 1;
                self.n_k[new] += 1;
            }
        }
        self.sweeps_done += 1;
    }

    /// Token-count conservation: per topic, the word-count table, the
    /// topic totals and the document-topic table must all agree.
    pub fn conservation_holds(&self) -> bool {
        (0..self.k).all(|topic| {
            let by_word: usize = self.n_kv[topic].iter().sum();
            let by_doc: usize = self.n_dk.iter().map(|row| row[topic]).sum();
            by_word == self.n_k[topic] && by_doc == self.n_k[topic]
        }) && self.n_k.iter().sum::<usize>() == self.dtm.total_tokens()
    }

    pub fn finalize(self) -> TopicModel {
        let v = self.dtm.vocab_size();
        let v_beta = v as f64 * self.beta;
        let phi = (0..self.k)
            .map(|topic| {
                (0..v)
                    .map(|word| {
                        (self.n_kv[topic][word] as f64 + self.beta)
                            / (self.n_k[topic] as f64 + v_beta)
                    })
                    .collect()
            })
            .collect();
        let k_alpha = self.k as f64 * self.alpha;
        let theta = self
            .n_dk
            .iter()
            .map(|row| {
                let n_d: usize = row.iter().sum();
                row.iter()
                    .map(|&c| (c as f64 + self.alpha) / (n_d as f64 + k_alpha))
                    .collect()
            })
            .collect();
        TopicModel {
            k: self.k,
            phi,
            theta,
            assignments: self.z,
            vocabulary: self.dtm.vocabulary.clone(),
            seed: self.seed,
            iterations: self.sweeps_done,
        }
    }
}

pub fn fit_lda(
    dtm: &DocTermMatrix,
    k: usize,
    seed: u64,
    iterations: usize,
    alpha: f64,
    beta: f64,
) -> Result<TopicModel, TopicError> {
    let mut sampler = GibbsSampler::new(dtm, k, seed, alpha, beta)?;
    for _ in 0..iterations {
        sampler.sweep();
    }
    debug_assert!(sampler.conservation_holds());
    Ok(sampler.finalize())
}

/// Fit with the standard heuristics: alpha = 50/K, beta = 0.01, 500 sweeps.
pub fn fit_lda_default(dtm: &DocTermMatrix, k: usize, seed: u64) -> Result<TopicModel, TopicError> {
    fit_lda(dtm, k, seed, DEFAULT_ITERATIONS, default_alpha(k), DEFAULT_BETA)
}

/// Top `m` vocabulary items of one topic by (probability desc, lemma asc).
pub fn top_terms(
    model: &TopicModel,
    topic_index: usize,
    m: usize,
) -> Result<Vec<(String, f64)>, TopicError> {
    if topic_index >= model.k {
        return Err(TopicError::BadTopicIndex {
            index: topic_index,
            k: model.k,
        });
    }
    let mut terms: Vec<(String, f64)> = model
        .vocabulary
        .iter()
        .cloned()
        .zip(model.phi[topic_index].iter().copied())
        .collect();
    terms.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    terms.truncate(m);
    Ok(terms)
}

/// Per document: argmax topic of the theta row (ties to the lowest index)
/// with its theta value.
pub fn assign_documents(model: &TopicModel, dtm: &DocTermMatrix) -> Vec<(String, usize, f64)> {
    model
        .theta
        .iter()
        .zip(dtm.doc_titles.iter())
        .map(|(row, title)| {
            let mut best = 0;
            for (topic, &value) in row.iter().enumerate() {
                if value > row[best] {
                    best = topic;
                }
            }
            (title.clone(), best, row[best])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_transcript;
    use crate::nlp::annotate_corpus;

    fn tiny_dtm() -> DocTermMatrix {
        DocTermMatrix {
            vocabulary: vec!["apple".into(), "bread".into(), "cheese".into()],
            doc_term_counts: vec![vec![3, 1, 0], vec![0, 2, 2], vec![1, 1, 1]],
            doc_titles: vec!["d0".into(), "d1".into(), "d2".into()],
        }
    }

    #[test]
    fn matrix_respects_document_frequency() {
        let corpus = annotate_corpus(
            &parse_transcript(
                "The patient described diabetes.\n<break>A</break>\nDiabetes needs exercise.\n<break>B</break>\nRain fell on the roof.\n<break>C</break>\n",
            )
            .unwrap(),
        );
        let dtm = build_doc_term_matrix(&corpus, 2);
        assert_eq!(dtm.vocabulary, vec!["diabetes".to_string()]);
        assert_eq!(dtm.doc_term_counts, vec![vec![1], vec![1], vec![0]]);

        let dtm1 = build_doc_term_matrix(&corpus, 1);
        assert!(dtm1.vocabulary.contains(&"rain".to_string()));
        assert!(!dtm1.vocabulary.contains(&"the".to_string()));
    }

    #[test]
    fn min_doc_freq_falls_back_when_nothing_repeats() {
        let corpus = annotate_corpus(
            &parse_transcript("Apples here.\n<break>A</break>\nBananas there.\n<break>B</break>\n")
                .unwrap(),
        );
        let dtm = build_doc_term_matrix(&corpus, 2);
        assert!(!dtm.vocabulary.is_empty());
    }

    #[test]
    fn single_topic_theta_is_exactly_one() {
        let dtm = tiny_dtm();
        let model = fit_lda_default(&dtm, 1, 42).unwrap();
        for row in &model.theta {
            assert_eq!(row, &vec![1.0]);
        }
        // phi row 0 equals the smoothed corpus term distribution
        let total: usize = dtm.total_tokens();
        let v = dtm.vocab_size() as f64;
        for (word, &p) in model.phi[0].iter().enumerate() {
            let count: usize = dtm.doc_term_counts.iter().map(|r| r[word]).sum();
            let expected = (count as f64 + DEFAULT_BETA) / (total as f64 + v * DEFAULT_BETA);
            assert!((p - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn rows_normalize_and_counts_conserve() {
        let dtm = tiny_dtm();
        let mut sampler = GibbsSampler::new(&dtm, 2, 7, default_alpha(2), DEFAULT_BETA).unwrap();
        assert!(sampler.conservation_holds());
        for _ in 0..25 {
            sampler.sweep();
            assert!(sampler.conservation_holds());
        }
        let model = sampler.finalize();
        for row in model.phi.iter().chain(model.theta.iter()) {
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() < 1e-9);
            assert!(row.iter().all(|&p| p >= 0.0));
        }
    }

    #[test]
    fn identical_seeds_give_identical_models() {
        let dtm = tiny_dtm();
        let a = fit_lda(&dtm, 2, 42, 50, default_alpha(2), DEFAULT_BETA).unwrap();
        let b = fit_lda(&dtm, 2, 42, 50, default_alpha(2), DEFAULT_BETA).unwrap();
        assert_eq!(a, b);
        let c = fit_lda(&dtm, 2, 43, 50, default_alpha(2), DEFAULT_BETA).unwrap();
        assert!(a.assignments != c.assignments || a.phi != c.phi);
    }

    #[test]
    fn top_terms_orders_and_clamps() {
        let dtm = DocTermMatrix {
            vocabulary: vec!["apple".into(), "bread".into()],
            doc_term_counts: vec![vec![1, 1], vec![1, 1]],
            doc_titles: vec!["a".into(), "b".into()],
        };
        let model = fit_lda_default(&dtm, 1, 42).unwrap();
        let terms = top_terms(&model, 0, 10).unwrap();
        assert_eq!(terms.len(), 2);
        assert!((terms[0].1 - 0.5).abs() < 0.01);
        assert_eq!(terms[0].0, "apple"); // equal probability, lemma ascending
        assert!(matches!(
            top_terms(&model, 1, 3),
            Err(TopicError::BadTopicIndex { .. })
        ));
    }

    #[test]
    fn assignment_takes_the_argmax() {
        let dtm = tiny_dtm();
        let model = fit_lda_default(&dtm, 1, 42).unwrap();
        for (_, topic, value) in assign_documents(&model, &dtm) {
            assert_eq!(topic, 0);
            assert_eq!(value, 1.0);
        }
        let fake = TopicModel {
            k: 2,
            phi: vec![vec![0.5, 0.5]; 2],
            theta: vec![vec![0.2, 0.8], vec![0.5, 0.5]],
            assignments: vec![],
            vocabulary: vec!["x".into(), "y".into()],
            seed: 0,
            iterations: 0,
        };
        let dtm2 = DocTermMatrix {
            vocabulary: vec!["x".into(), "y".into()],
            doc_term_counts: vec![vec![1, 0], vec![0, 1]],
            doc_titles: vec!["p".into(), "q".into()],
        };
        let assigned = assign_documents(&fake, &dtm2);
        assert_eq!(assigned[0].1, 1);
        assert_eq!(assigned[1].1, 0); // tie goes to the lowest index
    }

    #[test]
    fn parameter_errors() {
        let dtm = tiny_dtm();
        assert!(matches!(
            fit_lda_default(&dtm, 4, 42),
            Err(TopicError::KTooLarge { .. })
        ));
        assert!(matches!(fit_lda_default(&dtm, 0, 42), Err(TopicError::ZeroTopics)));
        let empty = DocTermMatrix {
            vocabulary: vec![],
            doc_term_counts: vec![],
            doc_titles: vec![],
        };
        assert!(matches!(
            fit_lda_default(&empty, 1, 42),
            Err(TopicError::EmptyMatrix)
        ));
    }
}
