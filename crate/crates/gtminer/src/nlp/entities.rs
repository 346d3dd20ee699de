//! Entity extraction: maximal contiguous PROPN runs.

use super::{PosTag, Sentence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entity {
    /// Space-joined token surfaces.
    pub text: String,
    pub start: usize,
    pub end: usize,
    /// Token index range within the sentence, end exclusive.
    pub token_range: (usize, usize),
}

pub fn extract_entities(sentence: &Sentence) -> Vec<Entity> {
    let mut out = Vec::new();
    let mut run_start: Option<usize> = None;
    for (i, tok) in sentence.tokens.iter().enumerate() {
        if tok.pos == PosTag::Propn {
            run_start.get_or_insert(i);
        } else if let Some(s) = run_start.take() {
            out.push(make_entity(sentence, s, i));
        }
    }
    if let Some(s) = run_start {
        out.push(make_entity(sentence, s, sentence.tokens.len()));
    }
    out
}

fn make_entity(sentence: &Sentence, from: usize, to: usize) -> Entity {
    let toks = &sentence.tokens[from..to];
    Entity {
        text: toks.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" "),
        start: toks[0].start,
        end: toks[toks.len() - 1].end,
        token_range: (from, to),
    }
}
