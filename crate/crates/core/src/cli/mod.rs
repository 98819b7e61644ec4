//! Expression language and subcommands behind the `hca` binary.

pub mod ast;
pub mod commands;
pub mod eval;

pub use ast::{parse, Ast, Func};
pub use commands::{basis_cmd, check_cmd, curvature_cmd, eval_cmd, parse_point};
pub use eval::{eval, format_result, json_result};
