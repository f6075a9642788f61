mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::Cli;

const USAGE_EXIT: u8 = 64;

fn render(doc: &Value, indent: Option<usize>) -> String {
    match indent {
        None => serde_json::to_string(doc).expect("JSON values serialize"),
        Some(width) => {
            let pad = vec![b' '; width];
            let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
            doc.serialize(&mut ser).expect("JSON values serialize");
            String::from_utf8(buf).expect("serde_json writes UTF-8")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE_EXIT),
            };
        }
    };
    let (mut doc, code) = match run::run(&cli) {
        Ok(doc) => (doc, 0),
        Err(f) => (f.to_json(), f.exit_code()),
    };
    doc["schema_version"] = antichain_core::SCHEMA_VERSION.into();
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", render(&doc, cli.json_indent));
    ExitCode::from(code as u8)
}
