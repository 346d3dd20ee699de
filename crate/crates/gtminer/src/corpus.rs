//! Transcript and CSV ingestion.
//!
//! Transcripts are plain text where a line of the form `<break>TITLE</break>`
//! closes the segment of text above it. Segments sharing a title are merged
//! into one document. Numeric data arrives as a bare comma-separated file:
//! identifier column first, dependent variable last, everything between is a
//! numeric feature. No quoting dialect — cells may not contain commas.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::sentiment::SentimentLabel;

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("line {line}: malformed break tag: {reason}")]
    TranscriptParse { line: usize, reason: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("no input files given")]
    NoInputs,
    #[error("csv schema error: {0}")]
    CsvSchema(String),
    #[error("csv row {row}, column {col}: {reason}")]
    CsvCell {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("unknown column '{title}'; available: {}", available.join(", "))]
    UnknownColumn {
        title: String,
        available: Vec<String>,
    },
    #[error("unknown title '{title}'; available: {}", available.join(", "))]
    UnknownTitle {
        title: String,
        available: Vec<String>,
    },
    #[error("filter has no fields set")]
    EmptyFilter,
}

/// One titled segment of transcript text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub title: String,
    pub text: String,
    /// 0-based first-appearance index within the corpus.
    pub source_order: usize,
}

/// Ordered collection of documents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub documents: Vec<Document>,
}

impl Corpus {
    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn titles(&self) -> Vec<String> {
        self.documents.iter().map(|d| d.title.clone()).collect()
    }

    /// Restrict to the given titles, preserving corpus order.
    pub fn select_titles(&self, titles: &[String]) -> Result<Corpus, IngestError> {
        let have: HashSet<&str> = self.documents.iter().map(|d| d.title.as_str()).collect();
        for t in titles {
            if !have.contains(t.as_str()) {
                return Err(IngestError::UnknownTitle {
                    title: t.clone(),
                    available: self.titles(),
                });
            }
        }
        let wanted: HashSet<&str> = titles.iter().map(|t| t.as_str()).collect();
        let documents = self
            .documents
            .iter()
            .filter(|d| wanted.contains(d.title.as_str()))
            .enumerate()
            .map(|(i, d)| Document {
                title: d.title.clone(),
                text: d.text.clone(),
                source_order: i,
            })
            .collect();
        Ok(Corpus { documents })
    }
}

/// Raw (title, text) segments in file order, before same-title merging.
fn parse_segments(raw: &str) -> Result<Vec<(String, String)>, IngestError> {
    let mut segments = Vec::new();
    let mut pending: Vec<&str> = Vec::new();
    for (idx, line) in raw.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.contains("<break>") || trimmed.contains("</break>") {
            let title = parse_tag_line(trimmed, lineno)?;
            segments.push((title, take_segment_text(&mut pending)));
        } else {
            pending.push(line);
        }
    }
    if !pending.is_empty() {
        let text = take_segment_text(&mut pending);
        if !text.is_empty() {
            segments.push((String::new(), text)); // untagged trailer, titled later
        }
    }
    Ok(segments)
}

fn take_segment_text(pending: &mut Vec<&str>) -> String {
    let text = pending.join("\n").trim().to_string();
    pending.clear();
    text
}

fn parse_tag_line(line: &str, lineno: usize) -> Result<String, IngestError> {
    let err = |reason: &str| IngestError::TranscriptParse {
        line: lineno,
        reason: reason.to_string(),
    };
    let inner = line
        .strip_prefix("<break>")
        .ok_or_else(|| err("text before <break> on the tag line"))?;
    let title = inner
        .strip_suffix("</break>")
        .ok_or_else(|| err("unclosed <break>"))?;
    if title.is_empty() {
        return Err(err("empty title"));
    }
    if title.chars().any(|c| c.is_whitespace() || c == '<' || c == '>') {
        return Err(err("title may not contain whitespace, '<' or '>'"));
    }
    Ok(title.to_string())
}

/// Merge segments into documents: same-title segments are concatenated in
/// order (joined by one newline, empty segments skipped); untitled trailers
/// become UNTAGGED_n using the supplied counter.
fn merge_segments(
    segments: Vec<(String, String)>,
    untagged_counter: &mut usize,
    order: &mut Vec<String>,
    texts: &mut HashMap<String, Vec<String>>,
) {
    for (mut title, text) in segments {
        if title.is_empty() {
            title = format!("UNTAGGED_{untagged_counter}");
            *untagged_counter += 1;
        }
        let entry = texts.entry(title.clone()).or_insert_with(|| {
            order.push(title.clone());
            Vec::new()
        });
        if !text.is_empty() {
            entry.push(text);
        }
    }
}

fn assemble(order: Vec<String>, mut texts: HashMap<String, Vec<String>>) -> Corpus {
    let documents = order
        .into_iter()
        .enumerate()
        .map(|(i, title)| {
            let parts = texts.remove(&title).unwrap_or_default();
            Document {
                title,
                text: parts.join("\n"),
                source_order: i,
            }
        })
        .collect();
    Corpus { documents }
}

/// Parse one transcript. Trailing text after the last tag becomes UNTAGGED_1.
pub fn parse_transcript(raw: &str) -> Result<Corpus, IngestError> {
    let segments = parse_segments(raw)?;
    let mut counter = 1;
    let mut order = Vec::new();
    let mut texts = HashMap::new();
    merge_segments(segments, &mut counter, &mut order, &mut texts);
    Ok(assemble(order, texts))
}

/// Parse and merge several transcript files. Titles merge across files;
/// source order is by global first appearance; the UNTAGGED counter runs
/// across files so every untagged trailer gets a distinct number.
pub fn load_corpus<P: AsRef<Path>>(paths: &[P]) -> Result<Corpus, IngestError> {
    if paths.is_empty() {
        return Err(IngestError::NoInputs);
    }
    let mut counter = 1;
    let mut order = Vec::new();
    let mut texts = HashMap::new();
    for p in paths {
        let raw = fs::read_to_string(p.as_ref()).map_err(|source| IngestError::Io {
            path: p.as_ref().to_path_buf(),
            source,
        })?;
        let segments = parse_segments(&raw)?;
        merge_segments(segments, &mut counter, &mut order, &mut texts);
    }
    Ok(assemble(order, texts))
}

/// Identifier column, numeric feature matrix and numeric dependent variable.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericTable {
    pub id_name: String,
    pub ids: Vec<String>,
    pub feature_names: Vec<String>,
    /// Row-major: features[row][col].
    pub features: Vec<Vec<f64>>,
    pub dv_name: String,
    pub dv: Vec<f64>,
}

impl NumericTable {
    pub fn rows(&self) -> usize {
        self.ids.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    /// Original header order: id, features, dv.
    pub fn header(&self) -> Vec<String> {
        let mut h = vec![self.id_name.clone()];
        h.extend(self.feature_names.iter().cloned());
        h.push(self.dv_name.clone());
        h
    }

    /// New table containing the given rows, in the given order.
    pub fn subset(&self, rows: &[usize]) -> NumericTable {
        NumericTable {
            id_name: self.id_name.clone(),
            ids: rows.iter().map(|&r| self.ids[r].clone()).collect(),
            feature_names: self.feature_names.clone(),
            features: rows.iter().map(|&r| self.features[r].clone()).collect(),
            dv_name: self.dv_name.clone(),
            dv: rows.iter().map(|&r| self.dv[r]).collect(),
        }
    }
}

pub fn parse_numeric_csv(raw: &str) -> Result<NumericTable, IngestError> {
    let raw = raw.strip_prefix('\u{feff}').unwrap_or(raw);
    let mut lines = raw
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (_, header_line) = lines
        .next()
        .ok_or_else(|| IngestError::CsvSchema("empty file".into()))?;
    let header: Vec<String> = header_line.split(',').map(|c| c.trim().to_string()).collect();
    if header.len() < 3 {
        return Err(IngestError::CsvSchema(format!(
            "need at least 3 columns (id, one feature, dv), got {}",
            header.len()
        )));
    }
    let mut seen = HashSet::new();
    for name in &header {
        if name.is_empty() {
            return Err(IngestError::CsvSchema("empty header name".into()));
        }
        if !seen.insert(name.clone()) {
            return Err(IngestError::CsvSchema(format!("duplicate header name '{name}'")));
        }
    }

    let ncols = header.len();
    let mut ids = Vec::new();
    let mut features = Vec::new();
    let mut dv = Vec::new();
    for (lineno, line) in lines {
        let cells: Vec<&str> = line.split(',').map(|c| c.trim()).collect();
        if cells.len() != ncols {
            return Err(IngestError::CsvSchema(format!(
                "row {lineno}: expected {ncols} cells, got {}",
                cells.len()
            )));
        }
        ids.push(cells[0].to_string());
        let mut row = Vec::with_capacity(ncols - 2);
        for (col0, cell) in cells.iter().enumerate().skip(1) {
            let value = parse_cell(cell, lineno, col0 + 1)?;
            if col0 == ncols - 1 {
                dv.push(value);
            } else {
                row.push(value);
            }
        }
        features.push(row);
    }

    Ok(NumericTable {
        id_name: header[0].clone(),
        feature_names: header[1..ncols - 1].to_vec(),
        dv_name: header[ncols - 1].clone(),
        ids,
        features,
        dv,
    })
}

fn parse_cell(cell: &str, row: usize, col: usize) -> Result<f64, IngestError> {
    if cell.is_empty() {
        return Err(IngestError::CsvCell {
            row,
            col,
            reason: "empty cell".into(),
        });
    }
    match cell.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(IngestError::CsvCell {
            row,
            col,
            reason: format!("'{cell}' is not a finite number"),
        }),
    }
}

/// Re-select columns by header name: first title becomes the identifier,
/// last the dependent variable, the rest features, regardless of original
/// positions. The original id column may only be chosen as the identifier.
pub fn select_columns(table: &NumericTable, titles: &[String]) -> Result<NumericTable, IngestError> {
    let header = table.header();
    if titles.len() < 3 {
        return Err(IngestError::CsvSchema(format!(
            "need at least 3 selected columns (id, one feature, dv), got {}",
            titles.len()
        )));
    }
    let mut seen = HashSet::new();
    for t in titles {
        if !header.contains(t) {
            return Err(IngestError::UnknownColumn {
                title: t.clone(),
                available: header,
            });
        }
        if !seen.insert(t.clone()) {
            return Err(IngestError::CsvSchema(format!("column '{t}' selected twice")));
        }
    }

    // Numeric view of a named column; the id column has no numeric values.
    let numeric_col = |name: &str| -> Result<Vec<f64>, IngestError> {
        if name == table.dv_name {
            Ok(table.dv.clone())
        } else if let Some(j) = table.feature_names.iter().position(|f| f == name) {
            Ok(table.features.iter().map(|r| r[j]).collect())
        } else {
            Err(IngestError::CsvSchema(format!(
                "identifier column '{name}' cannot be used as a numeric column"
            )))
        }
    };

    let id_name = titles[0].clone();
    let ids = if id_name == table.id_name {
        table.ids.clone()
    } else {
        numeric_col(&id_name)?.iter().map(|v| format!("{v}")).collect()
    };

    let feature_names: Vec<String> = titles[1..titles.len() - 1].to_vec();
    let cols: Vec<Vec<f64>> = feature_names
        .iter()
        .map(|n| numeric_col(n))
        .collect::<Result<_, _>>()?;
    let features = (0..table.rows())
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let dv_name = titles[titles.len() - 1].clone();
    let dv = numeric_col(&dv_name)?;

    Ok(NumericTable {
        id_name,
        ids,
        feature_names,
        features,
        dv_name,
        dv,
    })
}

/// Conjunctive document filter. Scorer and category index are supplied by
/// the caller so this module stays free of NLP machinery.
#[derive(Debug, Clone, Default)]
pub struct FilterSpec {
    pub titles: Option<BTreeSet<String>>,
    pub sentiment: Option<SentimentLabel>,
    pub category: Option<String>,
}

impl FilterSpec {
    pub fn is_empty(&self) -> bool {
        self.titles.is_none() && self.sentiment.is_none() && self.category.is_none()
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(ts) = &self.titles {
            parts.push(format!("titles={{{}}}", ts.iter().cloned().collect::<Vec<_>>().join(",")));
        }
        if let Some(s) = &self.sentiment {
            parts.push(format!("sentiment={s}"));
        }
        if let Some(c) = &self.category {
            parts.push(format!("category={c}"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Keep the documents matching every set field of the filter. Order is
/// preserved; retained documents are renumbered to keep source_order
/// contiguous.
pub fn filter_documents<S, C>(
    corpus: &Corpus,
    spec: &FilterSpec,
    sentiment_scorer: S,
    category_index: C,
) -> Result<Corpus, IngestError>
where
    S: Fn(&Document) -> SentimentLabel,
    C: Fn(&Document) -> HashSet<String>,
{
    if spec.is_empty() {
        return Err(IngestError::EmptyFilter);
    }
    let documents = corpus
        .documents
        .iter()
        .filter(|d| {
            if let Some(titles) = &spec.titles {
                if !titles.contains(&d.title) {
                    return false;
                }
            }
            if let Some(label) = &spec.sentiment {
                if sentiment_scorer(d) != *label {
                    return false;
                }
            }
            if let Some(lemma) = &spec.category {
                if !category_index(d).contains(lemma) {
                    return false;
                }
            }
            true
        })
        .enumerate()
        .map(|(i, d)| Document {
            title: d.title.clone(),
            text: d.text.clone(),
            source_order: i,
        })
        .collect();
    Ok(Corpus { documents })
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE_SEGMENTS: &str = "First interview with John.\nAny number of lines with\nthe transcribed text\n<break>Interview_John</break>\n\nSecond interview with Jane.\nMore text.\n<break>Interview_Jane</break>\n\nAdditional comments by John.\nShows that the tag can be repeated.\n<break>Interview_John</break>\n";

    #[test]
    fn repeated_titles_merge() {
        let corpus = parse_transcript(THREE_SEGMENTS).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.documents[0].title, "Interview_John");
        assert_eq!(
            corpus.documents[0].text,
            "First interview with John.\nAny number of lines with\nthe transcribed text\nAdditional comments by John.\nShows that the tag can be repeated."
        );
        assert_eq!(corpus.documents[1].title, "Interview_Jane");
        assert_eq!(corpus.documents[1].text, "Second interview with Jane.\nMore text.");
        assert_eq!(corpus.documents[0].source_order, 0);
        assert_eq!(corpus.documents[1].source_order, 1);
    }

    #[test]
    fn empty_input_is_empty_corpus() {
        assert!(parse_transcript("").unwrap().is_empty());
    }

    #[test]
    fn untagged_text_gets_a_title() {
        let corpus = parse_transcript("hello world").unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus.documents[0].title, "UNTAGGED_1");
        assert_eq!(corpus.documents[0].text, "hello world");
    }

    #[test]
    fn trailing_untagged_after_tags() {
        let corpus = parse_transcript("a\n<break>T</break>\nleftover").unwrap();
        assert_eq!(corpus.titles(), vec!["T", "UNTAGGED_1"]);
        assert_eq!(corpus.documents[1].text, "leftover");
    }

    #[test]
    fn malformed_tags_name_the_line() {
        let err = parse_transcript("x\n<break>Oops\ny").unwrap_err();
        match err {
            IngestError::TranscriptParse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_transcript("<break></break>").is_err());
        assert!(parse_transcript("<break>two words</break>").is_err());
        assert!(parse_transcript("junk</break>").is_err());
        assert!(parse_transcript("text <break>T</break>").is_err());
    }

    #[test]
    fn load_corpus_merges_across_files() {
        let dir = std::env::temp_dir().join(format!("gtminer_ingest_{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let a = dir.join("a.txt");
        let b = dir.join("b.txt");
        fs::write(&a, "alpha text\n<break>P5</break>\n").unwrap();
        fs::write(&b, "beta text\n<break>P7</break>\nmore alpha\n<break>P5</break>\n").unwrap();
        let corpus = load_corpus(&[&a, &b]).unwrap();
        assert_eq!(corpus.titles(), vec!["P5", "P7"]);
        assert_eq!(corpus.documents[0].text, "alpha text\nmore alpha");
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn load_corpus_rejects_no_paths() {
        let paths: Vec<&Path> = Vec::new();
        assert!(matches!(load_corpus(&paths), Err(IngestError::NoInputs)));
    }

    #[test]
    fn load_corpus_reports_missing_file() {
        let err = load_corpus(&["/nonexistent/gtminer.txt"]).unwrap_err();
        match err {
            IngestError::Io { path, .. } => {
                assert_eq!(path, PathBuf::from("/nonexistent/gtminer.txt"))
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    const DIABETES: &str =
        "index, obesity, bmi, exercise, fbs, has_diabetes\n1, 0, 29, 1, 89, 1\n2, 1, 32, 0, 92, 0\n";

    #[test]
    fn parses_the_diabetes_sample() {
        let t = parse_numeric_csv(DIABETES).unwrap();
        assert_eq!(t.rows(), 2);
        assert_eq!(t.n_features(), 4);
        assert_eq!(t.ids, vec!["1", "2"]);
        assert_eq!(t.feature_names, vec!["obesity", "bmi", "exercise", "fbs"]);
        assert_eq!(t.features, vec![vec![0.0, 29.0, 1.0, 89.0], vec![1.0, 32.0, 0.0, 92.0]]);
        assert_eq!(t.dv_name, "has_diabetes");
        assert_eq!(t.dv, vec![1.0, 0.0]);
    }

    #[test]
    fn header_only_is_a_valid_empty_table() {
        let t = parse_numeric_csv("id, x, y\n").unwrap();
        assert_eq!(t.rows(), 0);
        assert_eq!(t.n_features(), 1);
    }

    #[test]
    fn non_numeric_cell_is_located() {
        let err = parse_numeric_csv("id, x, y\n1, NA, 2\n").unwrap_err();
        match err {
            IngestError::CsvCell { row, col, .. } => {
                assert_eq!((row, col), (2, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(parse_numeric_csv("id, y\n"), Err(IngestError::CsvSchema(_))));
        assert!(matches!(
            parse_numeric_csv("id, x, x\n"),
            Err(IngestError::CsvSchema(_))
        ));
        assert!(matches!(
            parse_numeric_csv("id, x, y\n1, 2\n"),
            Err(IngestError::CsvSchema(_))
        ));
        assert!(matches!(
            parse_numeric_csv("id, x, y\n1, inf, 3\n"),
            Err(IngestError::CsvCell { .. })
        ));
    }

    #[test]
    fn select_columns_reorders() {
        let csv = "Index, Age, Exercise, Obesity, Stress, Outcome\n1, 40, 1, 0, 3, 1\n2, 50, 0, 1, 5, 0\n";
        let t = parse_numeric_csv(csv).unwrap();
        let titles: Vec<String> = ["Index", "Exercise", "Obesity", "Stress", "Outcome"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let s = select_columns(&t, &titles).unwrap();
        assert_eq!(s.feature_names, vec!["Exercise", "Obesity", "Stress"]);
        assert_eq!(s.dv_name, "Outcome");
        assert_eq!(s.features, vec![vec![1.0, 0.0, 3.0], vec![0.0, 1.0, 5.0]]);
        assert_eq!(s.dv, vec![1.0, 0.0]);
        assert_eq!(s.ids, vec!["1", "2"]);
    }

    #[test]
    fn select_columns_identity() {
        let t = parse_numeric_csv(DIABETES).unwrap();
        let s = select_columns(&t, &t.header()).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn select_columns_minimum_three() {
        let t = parse_numeric_csv(DIABETES).unwrap();
        let titles: Vec<String> = vec!["index".into(), "has_diabetes".into()];
        assert!(matches!(
            select_columns(&t, &titles),
            Err(IngestError::CsvSchema(_))
        ));
    }

    #[test]
    fn select_columns_unknown_title_lists_header() {
        let t = parse_numeric_csv(DIABETES).unwrap();
        let titles: Vec<String> = vec!["index".into(), "nope".into(), "has_diabetes".into()];
        match select_columns(&t, &titles).unwrap_err() {
            IngestError::UnknownColumn { title, available } => {
                assert_eq!(title, "nope");
                assert_eq!(available.len(), 6);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn select_columns_id_must_stay_first() {
        let t = parse_numeric_csv(DIABETES).unwrap();
        let titles: Vec<String> = vec!["bmi".into(), "index".into(), "has_diabetes".into()];
        assert!(select_columns(&t, &titles).is_err());
        // but a numeric column may serve as the identifier
        let titles: Vec<String> = vec!["bmi".into(), "fbs".into(), "has_diabetes".into()];
        let s = select_columns(&t, &titles).unwrap();
        assert_eq!(s.ids, vec!["29", "32"]);
    }

    fn doc(title: &str, text: &str, order: usize) -> Document {
        Document {
            title: title.into(),
            text: text.into(),
            source_order: order,
        }
    }

    #[test]
    fn filter_by_title() {
        let corpus = Corpus {
            documents: vec![doc("P5", "a", 0), doc("P7", "b", 1)],
        };
        let spec = FilterSpec {
            titles: Some(["P5".to_string()].into_iter().collect()),
            ..Default::default()
        };
        let out = filter_documents(&corpus, &spec, |_| SentimentLabel::Neu, |_| HashSet::new())
            .unwrap();
        assert_eq!(out.titles(), vec!["P5"]);
    }

    #[test]
    fn filter_by_sentiment_can_empty() {
        let corpus = Corpus {
            documents: vec![doc("P5", "a", 0), doc("P7", "b", 1)],
        };
        let spec = FilterSpec {
            sentiment: Some(SentimentLabel::Pos),
            ..Default::default()
        };
        let out = filter_documents(&corpus, &spec, |_| SentimentLabel::Neg, |_| HashSet::new())
            .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn empty_filter_is_a_usage_error() {
        let corpus = Corpus::default();
        let spec = FilterSpec::default();
        assert!(matches!(
            filter_documents(&corpus, &spec, |_| SentimentLabel::Neu, |_| HashSet::new()),
            Err(IngestError::EmptyFilter)
        ));
    }

    #[test]
    fn filtering_is_idempotent() {
        let corpus = Corpus {
            documents: vec![doc("P5", "a", 0), doc("P7", "b", 1), doc("P9", "c", 2)],
        };
        let spec = FilterSpec {
            titles: Some(["P5".to_string(), "P9".to_string()].into_iter().collect()),
            ..Default::default()
        };
        let once = filter_documents(&corpus, &spec, |_| SentimentLabel::Neu, |_| HashSet::new())
            .unwrap();
        let twice = filter_documents(&once, &spec, |_| SentimentLabel::Neu, |_| HashSet::new())
            .unwrap();
        assert_eq!(once, twice);
        for d in &once.documents {
            assert!(corpus.documents.iter().any(|o| o.title == d.title && o.text == d.text));
        }
    }
}
