//! Command-line front end: flag parsing, pipeline orchestration
//! (title selection, then filters, then analyses) and deterministic text
//! rendering. Exit codes: 0 success, 2 usage, 3 input or parse error,
//! 4 analysis parameter error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use gtminer::coding::{build_coding_dictionary, corpus_concepts, summarize, top_categories};
use gtminer::corpus::{
    filter_documents, load_corpus, parse_numeric_csv, select_columns, Corpus, FilterSpec,
    IngestError, NumericTable,
};
use gtminer::ml::{
    evaluate_classifier, fit_linear_svm, fit_mlp, kmeans, knn_neighbors, oversample, pca,
    train_test_split, MlError, SplitSpec, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use gtminer::nlp::{annotate_corpus, annotate_text, PosTag};
use gtminer::sentiment::{document_label, label, score_document, score_sentences, SentimentLabel};
use gtminer::topics::{
    assign_documents, build_doc_term_matrix, default_alpha, fit_lda, top_terms, TopicError,
    DEFAULT_BETA, DEFAULT_ITERATIONS,
};

pub const HELP: &str = "\
gtminer - grounded-theory text mining with numeric triangulation

USAGE:
    gtminer [OPTIONS] <ACTIONS>

DATA:
    -i <FILE>            transcript input, repeatable; segments end with a
                         line of the form <break>TITLE</break>
    --csv <FILE>         numeric table: id column first, dependent variable
                         last, everything between numeric
    -o <FILE>            write the report to FILE instead of stdout
    -t, --titles <NAME>  repeatable; select transcript titles, or re-select
                         CSV columns (first = id, last = dependent variable)
    -f, --filters <F>    repeatable; pos|neg|neu or category:<lemma>

TEXT ACTIONS:
    --cat                top categories, i.e. repeated content verbs
    --codedict           coding dictionary (categories, properties, dimensions)
    --topics             fit topics and list their top terms
    --assign             assign each document to its best topic
    --sentiment          document-level sentiment
    --sentence           sentence-level sentiment
    --summary            extractive summary sentences
    --concepts           most frequent named entities

NUMERIC ACTIONS:
    --nnet               train the neural network; -n = epochs
    --svm                linear SVM with confusion matrix
    --kmeans             cluster records; -n = clusters
    --knn                nearest rows; -n = neighbours, -r = record
    --pca                principal components; -n = factors

PARAMETERS:
    -n <INT>             overloaded count: top-N for text actions (default
                         10; topics/assign default 3), epochs for --nnet,
                         clusters for --kmeans, neighbours for --knn,
                         factors for --pca (required for those four)
    -r, --rec <INT>      record index for --knn (0-based)
    --oversample         duplicate minority-class rows in the training split
    --seed <INT>         seed for every randomized step (default 42; the
                         GTMINER_SEED environment variable overrides the
                         default, the flag wins over both)
    --lr <FLOAT>         neural-net learning rate (default 0.1)
    --lambda <FLOAT>     SVM regularization (default 0.001)
    --svm-epochs <INT>   SVM epochs (default 1000)
    --alpha <FLOAT>      topic document prior (default 50/K)
    --beta <FLOAT>       topic word prior (default 0.01)
    --lda-iters <INT>    Gibbs sweeps (default 500)
    --min-df <INT>       topic vocabulary document frequency (default 2)
    --test-fraction <F>  held-out fraction for --nnet/--svm (default 0.2)
    -h, --help           this message
";

/// Requested analyses, in their fixed execution order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Action {
    Cat,
    Codedict,
    Topics,
    Assign,
    Sentiment,
    Sentence,
    Summary,
    Concepts,
    Nnet,
    Svm,
    Kmeans,
    Knn,
    Pca,
}

impl Action {
    fn is_text(self) -> bool {
        matches!(
            self,
            Action::Cat
                | Action::Codedict
                | Action::Topics
                | Action::Assign
                | Action::Sentiment
                | Action::Sentence
                | Action::Summary
                | Action::Concepts
        )
    }

    /// Default -n for text actions that consume one; None means the action
    /// ignores -n entirely.
    fn default_n(self) -> Option<usize> {
        match self {
            Action::Cat | Action::Codedict | Action::Summary | Action::Concepts => Some(10),
            Action::Topics | Action::Assign => Some(3),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Hyperparams {
    pub learning_rate: Option<f64>,
    pub lambda: Option<f64>,
    pub svm_epochs: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub lda_iterations: Option<usize>,
    pub min_doc_freq: Option<usize>,
    pub test_fraction: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub n: Option<usize>,
    pub rec: Option<usize>,
    pub titles: Vec<String>,
    pub filters: Vec<String>,
    pub actions: BTreeSet<Action>,
    pub oversample: bool,
    pub seed: u64,
    pub overrides: Hyperparams,
}

#[derive(Debug)]
pub enum CliError {
    /// exit 2; also returned for -h with an exit code of 0
    Usage(String),
    Help,
    /// exit 3
    Input(String),
    /// exit 4
    Analysis(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Help => 0,
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Analysis(_) => 4,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Help => String::new(),
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Input(m) => format!("input error: {m}"),
            CliError::Analysis(m) => format!("analysis error: {m}"),
        }
    }
}

impl From<IngestError> for CliError {
    fn from(e: IngestError) -> Self {
        match e {
            IngestError::NoInputs | IngestError::EmptyFilter => CliError::Usage(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<TopicError> for CliError {
    fn from(e: TopicError) -> Self {
        CliError::Analysis(e.to_string())
    }
}

impl From<MlError> for CliError {
    fn from(e: MlError) -> Self {
        CliError::Analysis(e.to_string())
    }
}

pub fn parse_args(argv: &[String]) -> Result<CliConfig, CliError> {
    parse_args_with_env(argv, std::env::var("GTMINER_SEED").ok())
}

pub fn parse_args_with_env(
    argv: &[String],
    env_seed: Option<String>,
) -> Result<CliConfig, CliError> {
    let usage = |m: String| Err(CliError::Usage(m));
    if argv.is_empty() {
        return usage("no action requested".into());
    }

    let mut config = CliConfig {
        inputs: Vec::new(),
        output: None,
        csv: None,
        n: None,
        rec: None,
        titles: Vec::new(),
        filters: Vec::new(),
        actions: BTreeSet::new(),
        oversample: false,
        seed: 42,
        overrides: Hyperparams::default(),
    };
    if let Some(raw) = env_seed {
        config.seed = raw
            .parse()
            .map_err(|_| CliError::Usage(format!("GTMINER_SEED is not an integer: '{raw}'")))?;
    }

    let mut i = 0;
    let next_value = |i: &mut usize, flag: &str| -> Result<String, CliError> {
        *i += 1;
        argv.get(*i)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("{flag} needs a value")))
    };
    macro_rules! parsed {
        ($i:expr, $flag:expr, $ty:ty) => {{
            let raw = next_value($i, $flag)?;
            raw.parse::<$ty>()
                .map_err(|_| CliError::Usage(format!("{} has an invalid value '{raw}'", $flag)))?
        }};
    }

    while i < argv.len() {
        let arg = argv[i].as_str();
        match arg {
            "-h" | "--help" => return Err(CliError::Help),
            "-i" => {
                // the documented `qrmine -i --csv data.csv` spelling: a bare
                // -i directly before --csv is tolerated and ignored
                match argv.get(i + 1).map(String::as_str) {
                    Some("--csv") => {}
                    Some(v) if !v.starts_with('-') => {
                        config.inputs.push(PathBuf::from(v));
                        i += 1;
                    }
                    _ => return usage("-i needs a file path".into()),
                }
            }
            "-o" => config.output = Some(PathBuf::from(next_value(&mut i, "-o")?)),
            "--csv" => config.csv = Some(PathBuf::from(next_value(&mut i, "--csv")?)),
            "-n" => config.n = Some(parsed!(&mut i, "-n", usize)),
            "-r" | "--rec" => config.rec = Some(parsed!(&mut i, "--rec", usize)),
            "-t" | "--titles" => config.titles.push(next_value(&mut i, "--titles")?),
            "-f" | "--filters" => {
                let value = next_value(&mut i, "--filters")?;
                validate_filter(&value)?;
                config.filters.push(value);
            }
            "--cat" => drop(config.actions.insert(Action::Cat)),
            "--codedict" => drop(config.actions.insert(Action::Codedict)),
            "--topics" => drop(config.actions.insert(Action::Topics)),
            "--assign" => drop(config.actions.insert(Action::Assign)),
            "--sentiment" => drop(config.actions.insert(Action::Sentiment)),
            "--sentence" => drop(config.actions.insert(Action::Sentence)),
            "--summary" => drop(config.actions.insert(Action::Summary)),
            "--concepts" => drop(config.actions.insert(Action::Concepts)),
            "--nnet" => drop(config.actions.insert(Action::Nnet)),
            "--svm" => drop(config.actions.insert(Action::Svm)),
            "--kmeans" => drop(config.actions.insert(Action::Kmeans)),
            "--knn" => drop(config.actions.insert(Action::Knn)),
            "--pca" => drop(config.actions.insert(Action::Pca)),
            "--oversample" => config.oversample = true,
            "--seed" => config.seed = parsed!(&mut i, "--seed", u64),
            "--lr" => config.overrides.learning_rate = Some(parsed!(&mut i, "--lr", f64)),
            "--lambda" => config.overrides.lambda = Some(parsed!(&mut i, "--lambda", f64)),
            "--svm-epochs" => {
                config.overrides.svm_epochs = Some(parsed!(&mut i, "--svm-epochs", usize))
            }
            "--alpha" => config.overrides.alpha = Some(parsed!(&mut i, "--alpha", f64)),
            "--beta" => config.overrides.beta = Some(parsed!(&mut i, "--beta", f64)),
            "--lda-iters" => {
                config.overrides.lda_iterations = Some(parsed!(&mut i, "--lda-iters", usize))
            }
            "--min-df" => config.overrides.min_doc_freq = Some(parsed!(&mut i, "--min-df", usize)),
            "--test-fraction" => {
                config.overrides.test_fraction = Some(parsed!(&mut i, "--test-fraction", f64))
            }
            unknown => return usage(format!("unknown flag '{unknown}'")),
        }
        i += 1;
    }

    validate(&config)?;
    Ok(config)
}

fn validate_filter(value: &str) -> Result<(), CliError> {
    if SentimentLabel::parse(value).is_some() {
        return Ok(());
    }
    match value.strip_prefix("category:") {
        Some(lemma) if !lemma.is_empty() => Ok(()),
        _ => Err(CliError::Usage(format!(
            "bad filter '{value}': expected pos|neg|neu or category:<lemma>"
        ))),
    }
}

fn validate(config: &CliConfig) -> Result<(), CliError> {
    let usage = |m: String| Err(CliError::Usage(m));
    if config.actions.is_empty() {
        return usage("no action requested".into());
    }
    let text: Vec<Action> = config.actions.iter().copied().filter(|a| a.is_text()).collect();
    let numeric: Vec<Action> = config.actions.iter().copied().filter(|a| !a.is_text()).collect();
    if !text.is_empty() && !numeric.is_empty() {
        return usage("text and numeric actions cannot be mixed in one invocation".into());
    }
    if !text.is_empty() && config.inputs.is_empty() {
        return usage("text actions need at least one -i input".into());
    }
    if !numeric.is_empty() && config.csv.is_none() {
        return usage("numeric actions need --csv".into());
    }
    for action in [Action::Nnet, Action::Kmeans, Action::Knn, Action::Pca] {
        if config.actions.contains(&action) && config.n.is_none() {
            let what = match action {
                Action::Nnet => "--nnet requires -n (number of epochs)",
                Action::Kmeans => "--kmeans requires -n (number of clusters)",
                Action::Knn => "--knn requires -n (number of neighbours)",
                _ => "--pca requires -n (number of factors)",
            };
            return usage(what.into());
        }
    }
    if let Some(n) = config.n {
        if n == 0 {
            return usage("-n must be at least 1".into());
        }
    }
    if config.actions.contains(&Action::Knn) && config.rec.is_none() {
        return usage("--knn requires --rec (record index)".into());
    }
    if config.rec.is_some() && !config.actions.contains(&Action::Knn) {
        return usage("--rec only applies to --knn".into());
    }
    // a single -n cannot satisfy actions whose defaults disagree
    if config.n.is_none() {
        let defaults: BTreeSet<usize> = text.iter().filter_map(|a| a.default_n()).collect();
        if defaults.len() > 1 {
            return usage(
                "these actions default to different -n values; pass -n explicitly or split the invocation"
                    .into(),
            );
        }
    }
    if config.sentiment_filter()?.is_none() && config.category_filter()?.is_none() {
        // nothing to check, filters may be empty
    }
    Ok(())
}

impl CliConfig {
    fn resolve_n(&self, action: Action) -> usize {
        self.n.or_else(|| action.default_n()).unwrap_or(10)
    }

    fn sentiment_filter(&self) -> Result<Option<SentimentLabel>, CliError> {
        let mut found: Option<SentimentLabel> = None;
        for f in &self.filters {
            if let Some(lbl) = SentimentLabel::parse(f) {
                match found {
                    Some(prev) if prev != lbl => {
                        return Err(CliError::Usage(
                            "conflicting sentiment filters; a document has one label".into(),
                        ))
                    }
                    _ => found = Some(lbl),
                }
            }
        }
        Ok(found)
    }

    fn category_filter(&self) -> Result<Option<String>, CliError> {
        let mut found: Option<String> = None;
        for f in &self.filters {
            if let Some(lemma) = f.strip_prefix("category:") {
                match &found {
                    Some(prev) if prev != lemma => {
                        return Err(CliError::Usage("at most one category filter is supported".into()))
                    }
                    _ => found = Some(lemma.to_string()),
                }
            }
        }
        Ok(found)
    }
}

/// Run every requested action and return the rendered report.
pub fn run(config: &CliConfig) -> Result<String, CliError> {
    let mut out = String::new();
    if config.actions.iter().any(|a| a.is_text()) {
        render_text_actions(config, &mut out)?;
    } else {
        render_numeric_actions(config, &mut out)?;
    }
    Ok(out)
}

fn section(out: &mut String, body: &str) {
    if !out.is_empty() {
        out.push('\n');
    }
    out.push_str(body);
}

fn render_text_actions(config: &CliConfig, out: &mut String) -> Result<(), CliError> {
    let mut corpus = load_corpus(&config.inputs)?;
    if !config.titles.is_empty() {
        corpus = corpus.select_titles(&config.titles)?;
    }
    let spec = FilterSpec {
        titles: None,
        sentiment: config.sentiment_filter()?,
        category: config.category_filter()?,
    };
    if !spec.is_empty() {
        corpus = filter_documents(&corpus, &spec, document_label, |doc| {
            annotate_text(&doc.text)
                .iter()
                .flat_map(|s| s.tokens.iter())
                .filter(|t| t.pos == PosTag::Verb)
                .map(|t| t.lemma.clone())
                .collect()
        })?;
    }
    let annotated = annotate_corpus(&corpus);

    // --topics and --assign share one fitted model
    let mut model_cache = None;
    let mut fit_topics = |config: &CliConfig| -> Result<_, CliError> {
        if model_cache.is_none() {
            let dtm = build_doc_term_matrix(&annotated, config.overrides.min_doc_freq.unwrap_or(2));
            let k = config.resolve_n(Action::Topics);
            let model = fit_lda(
                &dtm,
                k,
                config.seed,
                config.overrides.lda_iterations.unwrap_or(DEFAULT_ITERATIONS),
                config.overrides.alpha.unwrap_or_else(|| default_alpha(k)),
                config.overrides.beta.unwrap_or(DEFAULT_BETA),
            )?;
            model_cache = Some((dtm, model));
        }
        Ok(model_cache.clone().unwrap())
    };

    for &action in &config.actions {
        match action {
            Action::Cat => {
                let mut body = String::from("Categories:\n");
                let cats = top_categories(&annotated, config.resolve_n(action));
                if cats.is_empty() {
                    body.push_str("No categories found.\n");
                } else {
                    for (i, (lemma, count)) in cats.iter().enumerate() {
                        let _ = writeln!(body, "{}. {lemma} ({count})", i + 1);
                    }
                }
                section(out, &body);
            }
            Action::Codedict => {
                let dict = build_coding_dictionary(&annotated, config.resolve_n(action), 5, 5);
                let mut body = format!(
                    "Coding dictionary (documents: {}, sentences: {}, tokens: {}):\n",
                    dict.documents, dict.sentences, dict.tokens
                );
                if dict.categories.is_empty() {
                    body.push_str("No categories found.\n");
                } else {
                    for (i, cat) in dict.categories.iter().enumerate() {
                        let _ = writeln!(body, "{}. {} ({})", i + 1, cat.verb_lemma, cat.count);
                        for prop in &cat.properties {
                            let dims = if prop.dimensions.is_empty() {
                                String::new()
                            } else {
                                let list: Vec<String> = prop
                                    .dimensions
                                    .iter()
                                    .map(|(l, c)| format!("{l} ({c})"))
                                    .collect();
                                format!(" [dimensions: {}]", list.join(", "))
                            };
                            let _ = writeln!(
                                body,
                                "   - {} ({}){dims}",
                                prop.noun_lemma, prop.cooccurrence
                            );
                        }
                    }
                }
                section(out, &body);
            }
            Action::Topics => {
                let (_, model) = fit_topics(config)?;
                let mut body = String::from("Topics:\n");
                for k in 0..model.k {
                    let terms = top_terms(&model, k, 10)?;
                    let list: Vec<String> =
                        terms.iter().map(|(t, p)| format!("{t} ({p:.4})")).collect();
                    let _ = writeln!(body, "Topic {k}: {}", list.join(", "));
                }
                section(out, &body);
            }
            Action::Assign => {
                let (dtm, model) = fit_topics(config)?;
                let mut body = String::from("Topic assignments:\n");
                for (title, topic, share) in assign_documents(&model, &dtm) {
                    let _ = writeln!(body, "{title} \u{2192} topic {topic} ({share:.4})");
                }
                section(out, &body);
            }
            Action::Sentiment => {
                let mut body = String::from("Sentiment:\n");
                for doc in &corpus.documents {
                    let s = score_document(doc);
                    let _ = writeln!(
                        body,
                        "{}: compound {:.4} ({}) [pos {:.3}, neg {:.3}, neu {:.3}]",
                        doc.title,
                        s.compound,
                        label(&s),
                        s.pos,
                        s.neg,
                        s.neu
                    );
                }
                section(out, &body);
            }
            Action::Sentence => {
                let mut body = String::from("Sentence sentiment:\n");
                for doc in &corpus.documents {
                    let _ = writeln!(body, "{}:", doc.title);
                    for (text, s) in score_sentences(doc) {
                        let flat = text.replace('\n', " ");
                        let _ = writeln!(body, "  [{:+.4}] {flat}", s.compound);
                    }
                }
                section(out, &body);
            }
            Action::Summary => {
                let mut body = String::from("Summary:\n");
                let picked = summarize(&annotated, config.resolve_n(action));
                if picked.is_empty() {
                    body.push_str("No sentences found.\n");
                } else {
                    for sentence in picked {
                        let _ = writeln!(body, "- {}", sentence.replace('\n', " "));
                    }
                }
                section(out, &body);
            }
            Action::Concepts => {
                let mut body = String::from("Concepts:\n");
                let concepts = corpus_concepts(&annotated, config.resolve_n(action));
                if concepts.is_empty() {
                    body.push_str("No concepts found.\n");
                } else {
                    for (i, (text, count)) in concepts.iter().enumerate() {
                        let _ = writeln!(body, "{}. {text} ({count})", i + 1);
                    }
                }
                section(out, &body);
            }
            _ => unreachable!("numeric action in the text path"),
        }
    }
    Ok(())
}

fn load_table(config: &CliConfig) -> Result<NumericTable, CliError> {
    let path = config.csv.as_ref().expect("validated");
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut table = parse_numeric_csv(&raw)?;
    if !config.titles.is_empty() {
        table = select_columns(&table, &config.titles)?;
    }
    Ok(table)
}

fn split_for_training(
    config: &CliConfig,
    table: &NumericTable,
) -> Result<(NumericTable, NumericTable), CliError> {
    let spec = SplitSpec {
        test_fraction: config.overrides.test_fraction.unwrap_or(0.2),
        seed: config.seed,
    };
    let (mut train, test) = train_test_split(table, &spec)?;
    if config.oversample {
        train = oversample(&train, config.seed)?;
    }
    Ok((train, test))
}

fn confusion_block(body: &mut String, accuracy: f64, cm: &gtminer::ml::ConfusionMatrix) {
    let _ = writeln!(body, "Test accuracy {accuracy:.4} on {} records.", cm.total());
    let _ = writeln!(body, "Confusion matrix (positive class = 1):");
    let _ = writeln!(body, "            predicted 1  predicted 0");
    let _ = writeln!(body, "actual 1    {:>11}  {:>11}", cm.true_pos, cm.false_neg);
    let _ = writeln!(body, "actual 0    {:>11}  {:>11}", cm.false_pos, cm.true_neg);
}

fn render_numeric_actions(config: &CliConfig, out: &mut String) -> Result<(), CliError> {
    let table = load_table(config)?;
    for &action in &config.actions {
        match action {
            Action::Nnet => {
                let (train, test) = split_for_training(config, &table)?;
                let epochs = config.n.expect("validated");
                let model = fit_mlp(
                    &train,
                    epochs,
                    config.seed,
                    config.overrides.learning_rate.unwrap_or(0.1),
                )?;
                let mut body = format!(
                    "Neural network ({} features, {} hidden units, {} training rows):\n",
                    model.layer_sizes[0],
                    model.layer_sizes[1],
                    train.rows()
                );
                for (epoch, (accuracy, loss)) in model.curve.iter().enumerate() {
                    let _ = writeln!(
                        body,
                        "epoch {}: accuracy {accuracy:.4} loss {loss:.6}",
                        epoch + 1
                    );
                }
                let (accuracy, cm) = evaluate_classifier(&model, &test)?;
                confusion_block(&mut body, accuracy, &cm);
                section(out, &body);
            }
            Action::Svm => {
                let (train, test) = split_for_training(config, &table)?;
                let model = fit_linear_svm(
                    &train,
                    config.overrides.svm_epochs.unwrap_or(1000),
                    config.overrides.lambda.unwrap_or(1e-3),
                    config.seed,
                )?;
                let train_acc = {
                    let (acc, _) = evaluate_classifier(&model, &train)?;
                    acc
                };
                let mut body = format!(
                    "Linear SVM ({} training rows, training accuracy {train_acc:.4}):\n",
                    train.rows()
                );
                let (accuracy, cm) = evaluate_classifier(&model, &test)?;
                confusion_block(&mut body, accuracy, &cm);
                section(out, &body);
            }
            Action::Kmeans => {
                let k = config.n.expect("validated");
                let result = kmeans(&table.features, k, config.seed, DEFAULT_MAX_ITER, DEFAULT_TOL)?;
                let mut body = format!("K-means ({k} clusters):\n");
                for (id, label) in table.ids.iter().zip(&result.labels) {
                    let _ = writeln!(body, "{id} \u{2192} cluster {label}");
                }
                let _ = writeln!(
                    body,
                    "Inertia {:.4} after {} iterations.",
                    result.inertia, result.iterations_run
                );
                section(out, &body);
            }
            Action::Knn => {
                let record = config.rec.expect("validated");
                let n = config.n.expect("validated");
                let neighbors = knn_neighbors(&table, record, n)?;
                let mut body = format!(
                    "Nearest neighbours of record {record} (id {}):\n",
                    table.ids.get(record).cloned().unwrap_or_default()
                );
                for (rank, (row, distance)) in neighbors.iter().enumerate() {
                    let _ = writeln!(body, "{}. {} ({distance:.4})", rank + 1, table.ids[*row]);
                }
                section(out, &body);
            }
            Action::Pca => {
                let factors = config.n.expect("validated");
                let result = pca(&table.features, factors)?;
                let mut body = format!("PCA ({factors} factors):\n");
                for (i, component) in result.components.iter().enumerate() {
                    let loadings: Vec<String> = table
                        .feature_names
                        .iter()
                        .zip(component)
                        .map(|(name, value)| format!("{name} {value:.4}"))
                        .collect();
                    let _ = writeln!(body, "PC{}: {}", i + 1, loadings.join(", "));
                }
                let variances: Vec<String> =
                    result.explained_variance.iter().map(|v| format!("{v:.4}")).collect();
                let _ = writeln!(body, "Explained variance: {}", variances.join(", "));
                let _ = writeln!(body, "Scores:");
                for (id, score) in table.ids.iter().zip(&result.scores) {
                    let values: Vec<String> = score.iter().map(|v| format!("{v:.4}")).collect();
                    let _ = writeln!(body, "{id}: {}", values.join(", "));
                }
                section(out, &body);
            }
            _ => unreachable!("text action in the numeric path"),
        }
    }
    Ok(())
}

/// Full CLI entry: parse, run, write to stdout or the -o file.
/// Returns the process exit code.
pub fn main_with(argv: &[String]) -> i32 {
    let config = match parse_args(argv) {
        Ok(c) => c,
        Err(CliError::Help) => {
            print!("{HELP}");
            return 0;
        }
        Err(e) => {
            eprintln!("{}", e.message());
            if matches!(e, CliError::Usage(_)) {
                eprint!("{HELP}");
            }
            return e.exit_code();
        }
    };
    match run(&config) {
        Ok(report) => {
            if let Some(path) = &config.output {
                if let Err(e) = std::fs::write(path, &report) {
                    eprintln!("input error: cannot write {}: {e}", path.display());
                    return 3;
                }
            } else {
                print!("{report}");
            }
            0
        }
        Err(e) => {
            eprintln!("{}", e.message());
            e.exit_code()
        }
    }
}

/// An unfiltered corpus loaded the same way `run` loads one; used by tests.
pub fn load_filtered_corpus(config: &CliConfig) -> Result<Corpus, CliError> {
    let mut corpus = load_corpus(&config.inputs)?;
    if !config.titles.is_empty() {
        corpus = corpus.select_titles(&config.titles)?;
    }
    Ok(corpus)
}
