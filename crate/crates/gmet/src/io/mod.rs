//! CLI surface, JSON interchange formats, and the table-reproduction
//! harness.

pub mod cli;
pub mod json;
pub mod spec_parse;
pub mod tables;

pub use cli::{cmd_enumerate, cmd_info, cmd_symmetry, info_for, select_partition, Cli};
pub use json::{
    partition_from_json, partition_to_json, perm_group_from_json, perm_group_to_json,
    weight_from_json, weight_to_json, GroupRef, JsonError, PartitionJson, PermGroupJson,
    WeightJson,
};
pub use spec_parse::{parse_group_spec, ParseError};
pub use tables::{
    bell_fixture, expected_rows, identification_candidates, report_to_csv, resolve_spec,
    run_tables, FixtureRow, RowStatus, TableRow, TablesOptions, TablesReport,
};
