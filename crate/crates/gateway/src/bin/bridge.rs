use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gateway::service::{SETTINGS_FILE, USERS_FILE};
use gateway::{Gateway, GatewayConfig, Role, SettingsStore, UserStore};
use preview::{export_series, Format};
use qr_engine::{
    echo_all, query_stations, retrieve_series, retrieve_study, CustomFilter, DestinationConfig, PatientFilters,
    QueryError, QueryFilters, SeriesFilters, StationConfig, StoreScp, StudyFilters, DEFAULT_STORE_AE,
    DEFAULT_STORE_PORT,
};

const USAGE: u8 = 2;
const FAILURE: u8 = 1;

/// DICOM query/retrieve gateway and command line client.
#[derive(Parser)]
#[command(name = "bridge", version)]
struct Cli {
    #[arg(long, env = "BRIDGE_DATA_DIR", default_value = "bridge-data", global = true)]
    data_dir: PathBuf,
    /// AE title of the local Store SCP, used as calling AE too.
    #[arg(long, env = "BRIDGE_STORE_AE", default_value = DEFAULT_STORE_AE, global = true)]
    store_ae: String,
    #[arg(long, env = "BRIDGE_STORE_PORT", default_value_t = DEFAULT_STORE_PORT, global = true)]
    store_port: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// C-ECHO stations.
    Echo(Targets),
    /// Query stations and print the result tree.
    Query(Box<QueryArgs>),
    /// Retrieve a study or series into the output root.
    Retrieve(RetrieveArgs),
    /// Render previews of a retrieved study or series.
    Preview(PreviewArgs),
    /// Run the HTTP gateway.
    Serve(ServeArgs),
    /// Add a user to the user store.
    UserAdd(UserAddArgs),
}

#[derive(Args)]
struct Targets {
    /// Saved station name, or AE@HOST:PORT (repeatable).
    #[arg(long = "station")]
    stations: Vec<String>,
    /// Every saved station.
    #[arg(long, conflicts_with = "stations")]
    all: bool,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    targets: Targets,
    #[arg(long)]
    patient_id: Option<String>,
    #[arg(long)]
    patient_name: Option<String>,
    #[arg(long)]
    sex: Option<String>,
    #[arg(long)]
    birth_date: Option<String>,
    #[arg(long)]
    study_date: Option<String>,
    #[arg(long)]
    study_time: Option<String>,
    #[arg(long)]
    study_id: Option<String>,
    #[arg(long)]
    referring_physician_name: Option<String>,
    #[arg(long)]
    accession_number: Option<String>,
    #[arg(long)]
    study_instance_uid: Option<String>,
    #[arg(long)]
    modality: Option<String>,
    #[arg(long)]
    series_instance_uid: Option<String>,
    #[arg(long)]
    series_number: Option<String>,
    /// Extra attribute, TAG=VALUE with TAG a keyword or (GGGG,EEEE); an
    /// empty VALUE only returns it (repeatable).
    #[arg(long, value_parser = parse_custom)]
    custom: Vec<CustomFilter>,
    /// Exact matching instead of the saved preference.
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Args)]
struct RetrieveArgs {
    /// Saved station name, or AE@HOST:PORT.
    #[arg(long)]
    station: String,
    #[arg(long)]
    study: String,
    /// Only this series of the study.
    #[arg(long)]
    series: Option<String>,
}

#[derive(Args)]
struct PreviewArgs {
    #[arg(long)]
    study: String,
    #[arg(long)]
    series: Option<String>,
    /// Destination; <data-dir>/previews when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value = "127.0.0.1:8080")]
    listen: String,
}

#[derive(Args)]
struct UserAddArgs {
    #[arg(long)]
    username: String,
    /// Read from the first line of stdin when omitted.
    #[arg(long)]
    password: Option<String>,
    #[arg(long, value_enum, default_value_t = RoleArg::User)]
    role: RoleArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Admin,
    User,
}

fn parse_custom(s: &str) -> Result<CustomFilter, String> {
    let (tag, value) = s.split_once('=').unwrap_or((s, ""));
    if tag.trim().is_empty() {
        return Err("expected TAG=VALUE".into());
    }
    Ok(CustomFilter { tag: tag.trim().to_string(), value: value.to_string() })
}

struct Failure(u8, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(USAGE, msg.into())
}

fn failed(msg: impl Into<String>) -> Failure {
    Failure(FAILURE, msg.into())
}

fn settings(cli: &Cli) -> Result<SettingsStore, Failure> {
    SettingsStore::open(&cli.data_dir.join(SETTINGS_FILE), cli.data_dir.join("studies"))
        .map_err(|e| failed(format!("cannot read settings: {e}")))
}

fn station(spec: &str, saved: &[StationConfig]) -> Result<StationConfig, Failure> {
    if let Some((ae, addr)) = spec.split_once('@') {
        let (host, port) = addr.rsplit_once(':').ok_or_else(|| usage(format!("{spec:?}: expected AE@HOST:PORT")))?;
        let port = port.parse().map_err(|_| usage(format!("{spec:?}: bad port")))?;
        let st = StationConfig::new(ae, ae, host, port);
        st.validate().map_err(|e| usage(format!("{spec:?}: {e}")))?;
        return Ok(st);
    }
    saved
        .iter()
        .find(|s| s.name == spec)
        .cloned()
        .ok_or_else(|| usage(format!("no saved station named {spec:?}")))
}

fn targets(t: &Targets, saved: &[StationConfig]) -> Result<Vec<StationConfig>, Failure> {
    if t.all || t.stations.is_empty() {
        if saved.is_empty() {
            return Err(usage("no saved stations; pass --station AE@HOST:PORT"));
        }
        return Ok(saved.to_vec());
    }
    t.stations.iter().map(|s| station(s, saved)).collect()
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn echo(cli: &Cli, t: &Targets) -> Result<(), Failure> {
    let store = settings(cli)?;
    let snapshot = store.snapshot();
    let stations = targets(t, &snapshot.stations)?;
    let statuses = echo_all(&stations, &snapshot.preferences.client(&cli.store_ae));
    for s in &statuses {
        let st = &s.station;
        match (&s.latency_ms, &s.error) {
            (Some(ms), _) => println!("{} {}@{}:{} reachable {ms} ms", st.name, st.ae_title, st.host, st.port),
            (_, e) => println!("{} {}@{}:{} unreachable: {}", st.name, st.ae_title, st.host, st.port, e.as_deref().unwrap_or("")),
        }
    }
    match statuses.iter().filter(|s| !s.reachable).count() {
        0 => Ok(()),
        n => Err(failed(format!("{n} of {} stations unreachable", statuses.len()))),
    }
}

fn query(cli: &Cli, a: &QueryArgs) -> Result<(), Failure> {
    let store = settings(cli)?;
    let snapshot = store.snapshot();
    let stations = targets(&a.targets, &snapshot.stations)?;
    let filters = QueryFilters {
        study: StudyFilters {
            study_date: a.study_date.clone(),
            study_time: a.study_time.clone(),
            study_id: a.study_id.clone(),
            referring_physician_name: a.referring_physician_name.clone(),
            accession_number: a.accession_number.clone(),
            study_instance_uid: a.study_instance_uid.clone(),
        },
        patient: PatientFilters {
            patient_id: a.patient_id.clone(),
            patient_name: a.patient_name.clone(),
            sex: a.sex.clone(),
            birth_date: a.birth_date.clone(),
        },
        series: SeriesFilters {
            modality: a.modality.clone(),
            series_instance_uid: a.series_instance_uid.clone(),
            series_number: a.series_number.clone(),
        },
        custom: a.custom.clone(),
    };
    let exact = a.exact || snapshot.preferences.exact_match;
    let outcome = query_stations(&stations, &filters, exact, &snapshot.preferences.client(&cli.store_ae)).map_err(|e| match e {
        QueryError::Filter(_) | QueryError::NoTargets => usage(e.to_string()),
        QueryError::AllStationsFailed(_) => failed(e.to_string()),
    })?;
    for f in &outcome.errors {
        eprintln!("warning: {}: {}", f.station.name, f.message);
    }
    match a.format {
        OutputFormat::Json => print_json(&serde_json::json!({ "studies": outcome.tree.studies, "errors": outcome.errors })),
        OutputFormat::Text => print!("{}", outcome.tree.to_text()),
    }
    Ok(())
}

fn retrieve(cli: &Cli, a: &RetrieveArgs) -> Result<(), Failure> {
    let store = settings(cli)?;
    let snapshot = store.snapshot();
    let st = station(&a.station, &snapshot.stations)?;
    let prefs = snapshot.preferences;
    let dest = DestinationConfig::new(&cli.store_ae, cli.store_port, prefs.output_root.clone());
    let mut scp = StoreScp::start(&dest).map_err(|e| failed(format!("cannot start store SCP: {e}")))?;
    let dest = DestinationConfig { store_port: scp.port(), ..dest };
    let client = prefs.client(&cli.store_ae);
    let mut progress = |p: qr_engine::Progress| eprintln!("{}/{} completed, {} failed", p.completed, p.expected, p.failed);
    let report = match &a.series {
        Some(series) => retrieve_series(&st, &a.study, series, &dest, &client, &mut progress),
        None => retrieve_study(&st, &a.study, &dest, &client, &mut progress),
    };
    scp.shutdown();
    print_json(&report);
    if report.success() {
        Ok(())
    } else {
        Err(failed(report.error.clone().unwrap_or_else(|| format!("{} of {} transfers failed", report.failed, report.expected))))
    }
}

fn preview(cli: &Cli, a: &PreviewArgs) -> Result<(), Failure> {
    let root = settings(cli)?.snapshot().preferences.output_root;
    let study_dir = root.join(&a.study);
    let series: Vec<String> = match &a.series {
        Some(s) => vec![s.clone()],
        None => {
            let mut found: Vec<String> = std::fs::read_dir(&study_dir)
                .map_err(|e| failed(format!("{} has not been retrieved: {e}", a.study)))?
                .filter_map(|e| e.ok())
                .filter(|e| e.path().is_dir())
                .filter_map(|e| e.file_name().into_string().ok())
                .collect();
            found.sort();
            found
        }
    };
    if series.is_empty() {
        return Err(failed(format!("{} has not been retrieved", a.study)));
    }
    let out_root = a.out.clone().unwrap_or_else(|| cli.data_dir.join("previews"));
    let mut manifests = serde_json::Map::new();
    for s in series {
        let out = out_root.join(&a.study).join(&s);
        let manifest = export_series(&study_dir.join(&s), &out, &[Format::Pnm, Format::Jpeg]).map_err(|e| failed(e.to_string()))?;
        eprintln!("{}: {} images in {}", s, manifest.entries.len(), out.display());
        manifests.insert(s, serde_json::to_value(manifest).expect("serializable"));
    }
    print_json(&manifests);
    Ok(())
}

fn serve(cli: &Cli, a: &ServeArgs) -> Result<(), Failure> {
    let mut config = GatewayConfig::new(&cli.data_dir);
    config.store_ae = cli.store_ae.clone();
    config.store_port = cli.store_port;
    config.admin_password = std::env::var("BRIDGE_ADMIN_PASSWORD").ok().filter(|p| !p.is_empty());
    let (gateway, generated) = Gateway::open(config).map_err(|e| failed(e.to_string()))?;
    if let Some(pw) = generated {
        eprintln!("created user \"admin\" with password {pw}");
    }
    let runtime = tokio::runtime::Runtime::new().map_err(|e| failed(e.to_string()))?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(&a.listen)
            .await
            .map_err(|e| failed(format!("cannot listen on {}: {e}", a.listen)))?;
        log::info!(
            "gateway on {}, store SCP {} on port {}",
            a.listen,
            gateway.store_ae(),
            gateway.store_port()
        );
        gateway::serve(Arc::new(gateway), listener).await.map_err(|e| failed(e.to_string()))
    })
}

fn user_add(cli: &Cli, a: &UserAddArgs) -> Result<(), Failure> {
    let password = match &a.password {
        Some(p) => p.clone(),
        None => {
            let mut line = String::new();
            std::io::stdin().lock().read_line(&mut line).map_err(|e| failed(e.to_string()))?;
            line.trim_end_matches(['\r', '\n']).to_string()
        }
    };
    let users = UserStore::open(&cli.data_dir.join(USERS_FILE)).map_err(|e| failed(format!("cannot read user store: {e}")))?;
    let role = match a.role {
        RoleArg::Admin => Role::Admin,
        RoleArg::User => Role::User,
    };
    let record = users.add(&a.username, &password, role).map_err(|e| match e.code {
        "validation" => usage(e.message),
        _ => failed(e.message),
    })?;
    println!("added {} ({:?})", record.username, record.role);
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Echo(t) => echo(&cli, t),
        Command::Query(a) => query(&cli, a),
        Command::Retrieve(a) => retrieve(&cli, a),
        Command::Preview(a) => preview(&cli, a),
        Command::Serve(a) => serve(&cli, a),
        Command::UserAdd(a) => user_add(&cli, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("bridge: {msg}");
            ExitCode::from(code)
        }
    }
}
