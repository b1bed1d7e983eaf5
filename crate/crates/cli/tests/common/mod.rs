//! Shared fixtures: the expected transcripts and helpers for driving the
//! binary.

// not every test file uses every helper
#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Output, Stdio};

pub const BASIC_TRANSCRIPT: &str = concat!(
    "starting basicServer\n",
    "handle: add()place() args: [BuckinghamPalace, London]\n",
    "    result: London\n",
    "handle: add()place() args: [EiffelTower, Paris]\n",
    "    result: Paris\n",
    "handle: whereIs() args: [EiffelTower]\n",
    "    result: Paris\n",
    "done\n",
);

pub const TRANSACTION_TRANSCRIPT: &str = concat!(
    "starting transactionServer\n",
    "handle: add()place() args: [BuckinghamPalace, London]\n",
    "    result: London\n",
    "handle: add()place() args: [EiffelTower, Paris]\n",
    "    result: Paris\n",
    "handle: whereIs() args: [EiffelTower]\n",
    "    result: Paris\n",
    "Error --- server crashed with NoSuchMethod: no method boojum()state in mirror for a callback\n",
    "handle: boojum() args: [EiffelTower]\n",
    "    result: !CRASH!\n",
    "handle: whereIs() args: [BuckinghamPalace]\n",
    "    result: London\n",
    "done\n",
);

pub const HOT_SWAP_TRANSCRIPT: &str = concat!(
    "starting hotSwapServer\n",
    "handle: add()place() args: [EiffelTower, Paris]\n",
    "    result: Paris\n",
    "handle: whereIs() args: [EiffelTower]\n",
    "    result: Paris\n",
    "handle: !HOTSWAP! args: [calculator]\n",
    "    result: calculator started.\n",
    "Error --- server crashed with NoSuchMethod: no method whereIs()state in mirror for a callback\n",
    "handle: whereIs() args: [EiffelTower]\n",
    "    result: !CRASH!\n",
    "handle: add() args: [3]\n",
    "    result: 3\n",
    "handle: add() args: [4]\n",
    "    result: 7\n",
    "done\n",
);

pub fn evalserve() -> Command {
    Command::new(env!("CARGO_BIN_EXE_evalserve"))
}

pub fn scenario_path(name: &str) -> String {
    format!("{}/scenarios/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs `serve` with a scenario file.
pub fn serve_with_file(kind: &str, callback: &str, scenario: &str) -> Output {
    evalserve()
        .args([
            "serve",
            "--kind",
            kind,
            "--callback",
            callback,
            "--scenario",
            &scenario_path(scenario),
        ])
        .output()
        .expect("spawn evalserve")
}

/// Runs `serve` feeding the given scenario text through stdin.
pub fn serve_with_stdin(kind: &str, callback: &str, input: &str) -> Output {
    let mut child = evalserve()
        .args(["serve", "--kind", kind, "--callback", callback])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn evalserve");
    child
        .stdin
        .take()
        .expect("piped stdin")
        .write_all(input.as_bytes())
        .expect("write scenario");
    child.wait_with_output().expect("wait for evalserve")
}

pub fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}
