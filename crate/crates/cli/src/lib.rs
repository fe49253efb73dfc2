//! Command-line front end for the sumset toolkit.

pub mod args;
pub mod cache;
pub mod commands;
pub mod parallel;
pub mod render;
pub mod suites;

use std::io::Write;

use clap::Parser;

use crate::args::Cli;
use crate::commands::{execute, Context};
use crate::render::Format;

/// Runs the CLI on `argv` and returns the process exit code.
///
/// 0 on success, 1 when a verification finds a mismatch, 2 on usage or input errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let format = if cli.global.json { Format::Json } else { cli.global.format };
    let ctx = Context::from_global(&cli.global);
    match execute(cli.command, &ctx) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(format).as_bytes());
            let _ = stdout.flush();
            if !out.complete {
                eprintln!("warning: budget reached, result is incomplete");
            }
            i32::from(out.mismatch)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
