use std::process::ExitCode;

use angk0::parallel::{init_global_pool, threads_from_env};
use angk0_cli::Registry;

fn main() -> ExitCode {
    init_global_pool(threads_from_env());
    let code = Registry::standard().run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code)
}
