//! File formats and the end-to-end pipeline.

mod format;
mod pipeline;

pub use format::{
    emit_lp_file, parse_generators_file, parse_lp_document, parse_lp_file, parse_matrix_file,
    LpFileDocument, LpRow, Relation,
};
pub use pipeline::{
    format_orbits, input_digest, read_file, reduce_text, resolve_symmetries, run_pipeline,
    run_pipeline_text, PipelineError, PipelineOptions, ReportLp, ReportRow, RunReport, StageReport,
    SymmetrySource, Verification,
};
