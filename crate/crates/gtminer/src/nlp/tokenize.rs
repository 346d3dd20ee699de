//! Whitespace tokenizer with edge-punctuation splitting and clitic handling.

/// Surface + span, before tagging. `&text[start..end] == surface`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawToken {
    pub surface: String,
    pub start: usize,
    pub end: usize,
}

fn is_punct_char(c: char) -> bool {
    !c.is_alphanumeric()
}

fn is_number(seg: &[(usize, char)]) -> bool {
    seg.iter().any(|(_, c)| c.is_ascii_digit())
        && seg.iter().all(|(_, c)| c.is_ascii_digit() || *c == '.' || *c == ',')
}

/// Split text into tokens: whitespace-separated chunks, with leading and
/// trailing punctuation split off one character at a time, contractions
/// split at the apostrophe clitic, internal hyphens kept, and numbers
/// (digits with optional separators) left whole.
pub fn tokenize(text: &str) -> Vec<RawToken> {
    let mut out = Vec::new();
    let mut chunk: Vec<(usize, char)> = Vec::new();
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if !chunk.is_empty() {
                split_chunk(text, &chunk, &mut out);
                chunk.clear();
            }
        } else {
            chunk.push((i, c));
        }
    }
    if !chunk.is_empty() {
        split_chunk(text, &chunk, &mut out);
    }
    out
}

fn push(text: &str, seg: &[(usize, char)], out: &mut Vec<RawToken>) {
    let start = seg[0].0;
    let end = seg[seg.len() - 1].0 + seg[seg.len() - 1].1.len_utf8();
    out.push(RawToken {
        surface: text[start..end].to_string(),
        start,
        end,
    });
}

fn split_chunk(text: &str, chunk: &[(usize, char)], out: &mut Vec<RawToken>) {
    let mut lo = 0;
    let mut hi = chunk.len();
    while lo < hi && is_punct_char(chunk[lo].1) {
        push(text, &chunk[lo..lo + 1], out);
        lo += 1;
    }
    let mut trailing = Vec::new();
    while hi > lo && is_punct_char(chunk[hi - 1].1) {
        trailing.push(hi - 1);
        hi -= 1;
    }
    if lo < hi {
        split_core(text, &chunk[lo..hi], out);
    }
    for &idx in trailing.iter().rev() {
        push(text, &chunk[idx..idx + 1], out);
    }
}

fn split_core(text: &str, seg: &[(usize, char)], out: &mut Vec<RawToken>) {
    if is_number(seg) {
        push(text, seg, out);
        return;
    }
    let n = seg.len();
    let lower = |i: usize| seg[i].1.to_ascii_lowercase();
    // n't keeps the n; other clitics split at the apostrophe
    if n > 3 && lower(n - 3) == 'n' && seg[n - 2].1 == '\'' && lower(n - 1) == 't' {
        push(text, &seg[..n - 3], out);
        push(text, &seg[n - 3..], out);
        return;
    }
    if n > 2 && seg[n - 2].1 == '\'' && matches!(lower(n - 1), 's' | 'd' | 'm') {
        push(text, &seg[..n - 2], out);
        push(text, &seg[n - 2..], out);
        return;
    }
    if n > 3
        && seg[n - 3].1 == '\''
        && matches!((lower(n - 2), lower(n - 1)), ('r', 'e') | ('v', 'e') | ('l', 'l'))
    {
        push(text, &seg[..n - 3], out);
        push(text, &seg[n - 3..], out);
        return;
    }
    push(text, seg, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(text: &str) -> Vec<String> {
        tokenize(text).into_iter().map(|t| t.surface).collect()
    }

    #[test]
    fn punctuation_splits_off() {
        assert_eq!(surfaces("Hello, world!"), vec!["Hello", ",", "world", "!"]);
    }

    #[test]
    fn empty_text_gives_nothing() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("   \n\t ").is_empty());
    }

    #[test]
    fn contractions_split_at_the_clitic() {
        assert_eq!(surfaces("don't"), vec!["do", "n't"]);
        assert_eq!(surfaces("John's"), vec!["John", "'s"]);
        assert_eq!(surfaces("they're we've I'll I'm he'd"),
            vec!["they", "'re", "we", "'ve", "I", "'ll", "I", "'m", "he", "'d"]);
    }

    #[test]
    fn hyphens_and_numbers_stay_whole() {
        assert_eq!(surfaces("well-being costs 3.14 or 1,000 today."),
            vec!["well-being", "costs", "3.14", "or", "1,000", "today", "."]);
    }

    #[test]
    fn wrapped_punctuation() {
        assert_eq!(surfaces("(hello)..."), vec!["(", "hello", ")", ".", ".", "."]);
    }

    #[test]
    fn spans_reconstruct_the_source() {
        let text = "She said: \"don't wait\" — twice!";
        for tok in tokenize(text) {
            assert_eq!(&text[tok.start..tok.end], tok.surface);
        }
    }

    #[test]
    fn spans_strictly_increase() {
        let text = "One, two... three!  Four?";
        let toks = tokenize(text);
        for pair in toks.windows(2) {
            assert!(pair[0].end <= pair[1].start);
        }
    }
}
