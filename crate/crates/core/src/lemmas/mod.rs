//! Mechanical verification of the forbidden/allowed word tables, forced
//! windows, and the lower-bound chains built on them.

mod chains;
mod constraint;
mod presets;
mod search;
mod tables;

pub use chains::{
    appendix_limit_sequence, appendix_pa, appendix_word, printed_minus9_expression, printed_plus9_expression, recursive_lower_bound,
    recursive_lower_bound_expression, verify_appendix, verify_minimality_chain, verify_recursive_bound,
    AppendixReport, AppendixRow, ChainReport, LimitCheck, APPENDIX_LIMIT_LITERAL, PRINTED_MINUS9_LIMIT,
    PRINTED_PLUS9_LIMIT, ChainStep, RecursiveBoundReport, CHAIN_PERIODS, CHAIN_START,
};
pub use constraint::WindowConstraint;
pub use presets::{
    forced_word, run_preset, ForcedWindowReport, Preset, FORCED_WORD, LF3P_ASSIGNED, LOWER_CAP, UPPER_FLOOR,
};
pub use search::{
    forced_window_search, PruneRecord, SearchOptions, SearchOutcome, DEFAULT_NODE_GUARD, DEFAULT_RANGE_LIMIT,
    NODE_GUARD_ENV,
};
pub use tables::{
    table_entries, verify_allowed_table, verify_entry, verify_forbidden_table, verify_table, EntryReport,
    PrintedBound, Table, TableEntry, ALLOWED_TABLE, FORBIDDEN_TABLE, HYPOTHESIS_RADIUS,
};
