//! Rule-based sentence boundary detection.
//!
//! A boundary falls after `.` `!` `?` when followed by whitespace and then
//! an uppercase letter or digit (or end of text). The bundled abbreviation
//! list suppresses `.` boundaries. A blank line is always a boundary.

use std::collections::BTreeSet;

use super::lexicon::Lexicons;

/// Trimmed byte spans of the sentences in `text`, in order.
pub fn split_sentence_spans(text: &str) -> Vec<(usize, usize)> {
    let abbreviations = &Lexicons::bundled().abbreviations;
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut cuts: BTreeSet<usize> = BTreeSet::new();

    let mut k = 0;
    while k < chars.len() {
        let (i, c) = chars[k];
        if matches!(c, '.' | '!' | '?') {
            let mut m = k + 1;
            let mut saw_ws = false;
            while m < chars.len() && chars[m].1.is_whitespace() {
                saw_ws = true;
                m += 1;
            }
            let at_end = m == chars.len();
            let next_starts_sentence = !at_end
                && saw_ws
                && (chars[m].1.is_uppercase() || chars[m].1.is_ascii_digit());
            if (at_end || next_starts_sentence)
                && !(c == '.' && is_abbreviation(text, &chars, k, abbreviations))
            {
                cuts.insert(i + c.len_utf8());
            }
        } else if c.is_whitespace() {
            // paragraph break: a whitespace run holding 2+ newlines
            let run_start = i;
            let mut newlines = 0;
            while k < chars.len() && chars[k].1.is_whitespace() {
                if chars[k].1 == '\n' {
                    newlines += 1;
                }
                k += 1;
            }
            if newlines >= 2 {
                cuts.insert(run_start);
            }
            continue;
        }
        k += 1;
    }

    let mut spans = Vec::new();
    let mut prev = 0;
    for cut in cuts.into_iter().chain(std::iter::once(text.len())) {
        if cut > prev {
            if let Some(span) = trimmed_span(text, prev, cut) {
                spans.push(span);
            }
            prev = cut;
        }
    }
    spans
}

fn is_abbreviation(
    text: &str,
    chars: &[(usize, char)],
    punct_idx: usize,
    abbreviations: &std::collections::HashSet<String>,
) -> bool {
    let mut w = punct_idx;
    while w > 0 && (chars[w - 1].1.is_alphanumeric() || chars[w - 1].1 == '.') {
        w -= 1;
    }
    if w == punct_idx {
        return false;
    }
    let (start, _) = chars[w];
    let (punct_byte, punct_char) = chars[punct_idx];
    let word = text[start..punct_byte + punct_char.len_utf8()].to_lowercase();
    abbreviations.contains(&word)
}

fn trimmed_span(text: &str, start: usize, end: usize) -> Option<(usize, usize)> {
    let slice = &text[start..end];
    let lead = slice.len() - slice.trim_start().len();
    let trimmed = slice.trim();
    if trimmed.is_empty() {
        None
    } else {
        Some((start + lead, start + lead + trimmed.len()))
    }
}
