use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

use qr_engine::{ClientConfig, StationConfig};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;
use crate::persist::{read_json, write_json_atomic};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preferences {
    pub exact_match: bool,
    pub connect_timeout_s: u32,
    pub dimse_timeout_s: u32,
    pub output_root: PathBuf,
}

impl Preferences {
    pub fn with_output_root(output_root: PathBuf) -> Self {
        Preferences { exact_match: false, connect_timeout_s: 5, dimse_timeout_s: 30, output_root }
    }

    pub fn client(&self, calling_ae: &str) -> ClientConfig {
        ClientConfig::new(calling_ae).with_timeouts(
            Duration::from_secs(u64::from(self.connect_timeout_s)),
            Duration::from_secs(u64::from(self.dimse_timeout_s)),
        )
    }

    /// Timeouts positive; output root creatable and writable.
    pub fn validate(&self) -> Result<(), ApiError> {
        if self.connect_timeout_s == 0 || self.dimse_timeout_s == 0 {
            return Err(ApiError::validation("timeouts must be positive integers"));
        }
        if self.output_root.as_os_str().is_empty() {
            return Err(ApiError::validation("output_root must not be empty"));
        }
        std::fs::create_dir_all(&self.output_root)
            .and_then(|_| tempfile::tempfile_in(&self.output_root).map(drop))
            .map_err(|e| {
                ApiError::validation(format!("output_root {} is not writable: {e}", self.output_root.display()))
            })
    }
}

/// The settings document: stations plus preferences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Settings {
    pub stations: Vec<StationConfig>,
    pub preferences: Preferences,
}

/// Identifies a station by (AE title, host, port).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StationKey {
    pub ae_title: String,
    pub host: String,
    pub port: u16,
}

impl StationKey {
    pub fn matches(&self, station: &StationConfig) -> bool {
        station.key() == (self.ae_title.trim().to_string(), self.host.trim().to_string(), self.port)
    }
}

impl From<&StationConfig> for StationKey {
    fn from(s: &StationConfig) -> Self {
        let (ae_title, host, port) = s.key();
        StationKey { ae_title, host, port }
    }
}

/// Settings held in memory and persisted on every change, one writer at a time.
pub struct SettingsStore {
    path: PathBuf,
    current: Mutex<Settings>,
}

impl SettingsStore {
    pub fn open(path: &Path, default_output_root: PathBuf) -> std::io::Result<SettingsStore> {
        let current = read_json(path)?.unwrap_or(Settings {
            stations: Vec::new(),
            preferences: Preferences::with_output_root(default_output_root),
        });
        Ok(SettingsStore { path: path.to_path_buf(), current: Mutex::new(current) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn snapshot(&self) -> Settings {
        self.current.lock().unwrap_or_else(|p| p.into_inner()).clone()
    }

    fn update<T>(&self, change: impl FnOnce(&mut Settings) -> Result<T, ApiError>) -> Result<T, ApiError> {
        let mut guard = self.current.lock().unwrap_or_else(|p| p.into_inner());
        let mut next = guard.clone();
        let out = change(&mut next)?;
        write_json_atomic(&self.path, &next)
            .map_err(|e| ApiError::internal(format!("cannot save settings: {e}")))?;
        *guard = next;
        Ok(out)
    }

    pub fn add_station(&self, station: StationConfig) -> Result<StationConfig, ApiError> {
        station.validate().map_err(|e| ApiError::validation(e.to_string()))?;
        let station = StationConfig::new(station.name.trim(), station.ae_title.trim(), station.host.trim(), station.port);
        self.update(|s| {
            if s.stations.iter().any(|x| x.key() == station.key()) {
                return Err(ApiError::conflict("a station with this AE title, host and port already exists"));
            }
            s.stations.push(station.clone());
            Ok(station)
        })
    }

    pub fn remove_station(&self, key: &StationKey) -> Result<StationConfig, ApiError> {
        self.update(|s| {
            let pos = s
                .stations
                .iter()
                .position(|x| key.matches(x))
                .ok_or_else(|| ApiError::not_found("no such station"))?;
            Ok(s.stations.remove(pos))
        })
    }

    pub fn find_station(&self, key: &StationKey) -> Option<StationConfig> {
        self.snapshot().stations.into_iter().find(|s| key.matches(s))
    }

    pub fn set_preferences(&self, prefs: Preferences) -> Result<Preferences, ApiError> {
        prefs.validate()?;
        self.update(|s| {
            s.preferences = prefs.clone();
            Ok(prefs)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("settings.json");
        let store = SettingsStore::open(&path, dir.path().join("out")).unwrap();
        store.add_station(StationConfig::new("mock", "MOCKPACS", "127.0.0.1", 11112)).unwrap();
        let mut prefs = store.snapshot().preferences;
        prefs.exact_match = true;
        store.set_preferences(prefs).unwrap();
        let before = std::fs::read(&path).unwrap();

        let reopened = SettingsStore::open(&path, PathBuf::from("ignored")).unwrap();
        assert_eq!(reopened.snapshot(), store.snapshot());
        reopened.set_preferences(reopened.snapshot().preferences).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), before);
    }

    #[test]
    fn station_rules() {
        let dir = tempfile::tempdir().unwrap();
        let store = SettingsStore::open(&dir.path().join("s.json"), dir.path().into()).unwrap();
        let st = StationConfig::new("a", "AE", "10.0.0.1", 104);
        store.add_station(st.clone()).unwrap();
        assert_eq!(store.add_station(st.clone()).unwrap_err().code, "conflict");
        assert_eq!(store.add_station(StationConfig::new("b", "AE", "h", 0)).unwrap_err().code, "validation");
        store.remove_station(&StationKey::from(&st)).unwrap();
        assert_eq!(store.remove_station(&StationKey::from(&st)).unwrap_err().code, "not_found");
    }

    #[test]
    fn preference_validation() {
        let dir = tempfile::tempdir().unwrap();
        let store = SettingsStore::open(&dir.path().join("s.json"), dir.path().into()).unwrap();
        let mut p = store.snapshot().preferences;
        p.dimse_timeout_s = 0;
        assert!(store.set_preferences(p).is_err());
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, b"x").unwrap();
        let p = Preferences::with_output_root(blocker.join("sub"));
        assert!(store.set_preferences(p).is_err());
        assert!(!dir.path().join("s.json").exists());
    }
}
