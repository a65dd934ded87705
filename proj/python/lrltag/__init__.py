"""Language-agnostic POS tagging toolkit for low-resource languages.

Everything is implemented in the C++ core; this package re-exports the
bindings so ``import lrltag`` gives the full toolkit surface.
"""

from lrltag._core import (
    NO_WORD,
    AlignedExample,
    BackendConfig,
    BackendId,
    BackendUnavailable,
    BundleCorrupt,
    ClassMetrics,
    CodecCoverageError,
    ConfigError,
    Corpus,
    DegenerateSplit,
    EmptyCorpus,
    EmptyInput,
    EmptyTagset,
    Error,
    EvaluationReport,
    ImageFormat,
    InconsistentTokenization,
    IoFailure,
    LengthMismatch,
    MalformedLine,
    ModelNotTrained,
    SchemaMismatch,
    SubwordTokenization,
    SummaryMetrics,
    TagCodec,
    TagDistribution,
    TaggedSentence,
    TaggingModel,
    TrainedTagger,
    UnknownId,
    UnknownTag,
    UnsupportedFormat,
    VersionMismatch,
    align_labels,
    backend_available,
    collapse_predictions,
    config_diff,
    confusion_csv,
    default_home,
    distribution_csv,
    evaluate,
    evaluate_tagger,
    export_report_csv,
    first_subword_mask,
    format_fixed,
    image_format_from_string,
    make_corpus,
    masked_cross_entropy,
    masked_cross_entropy_grad,
    normalize_parallel,
    parse_parallel,
    parse_two_column,
    read_text_file,
    render_confusion,
    render_distribution_chart,
    render_report,
    report_csv,
    resolve_bundle_dir,
    serialize_two_column,
    sha256_hex,
    split_train_test,
    split_whitespace,
    tag_distribution,
    top2_share,
    truncate_at_word_boundary,
    validate_tokenization,
    write_text_file,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
