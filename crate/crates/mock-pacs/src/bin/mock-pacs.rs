use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use dimse_net::ServerConfig;
use mock_pacs::{Fixture, MockPacs, DEFAULT_AE_TITLE};

/// Serve a seeded in-memory PACS until interrupted.
#[derive(Parser)]
#[command(name = "mock-pacs", version)]
struct Args {
    /// TOML manifest of instances, destinations and faults; the built-in
    /// standard fixture when omitted.
    #[arg(long)]
    manifest: Option<PathBuf>,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    #[arg(long, default_value_t = 11112)]
    port: u16,
    #[arg(long, default_value = DEFAULT_AE_TITLE)]
    ae: String,
    /// Extra move destination, AE=HOST:PORT (repeatable).
    #[arg(long = "destination", value_parser = parse_destination)]
    destinations: Vec<(String, String, u16)>,
}

fn parse_destination(s: &str) -> Result<(String, String, u16), String> {
    let (ae, addr) = s.split_once('=').ok_or("expected AE=HOST:PORT")?;
    let (host, port) = addr.rsplit_once(':').ok_or("expected AE=HOST:PORT")?;
    let port = port.parse().map_err(|e| format!("bad port: {e}"))?;
    Ok((ae.to_string(), host.to_string(), port))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let args = Args::parse();
    let mut fixture = match &args.manifest {
        None => Fixture::standard(),
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match Fixture::from_manifest(&text) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("{}: {e}", path.display());
                    return ExitCode::from(2);
                }
            },
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
    };
    for (ae, host, port) in args.destinations {
        fixture = fixture.with_destination(&ae, &host, port);
    }
    let count = fixture.instances.len();
    let pacs = match MockPacs::seed_with(fixture, ServerConfig::new(&args.ae, &args.host, args.port)) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("mock-pacs: {e}");
            return ExitCode::from(1);
        }
    };
    log::info!("{} serving {count} instances on {}:{}", pacs.ae_title(), args.host, pacs.port());
    loop {
        std::thread::park();
    }
}
