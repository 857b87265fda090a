use std::path::{Path, PathBuf};
use std::sync::Mutex;

use chrono::{DateTime, Utc};
use rand::RngCore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use subtle::ConstantTimeEq;

use crate::error::ApiError;
use crate::persist::{read_json, write_json_atomic};

pub const ADMIN_USERNAME: &str = "admin";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Admin,
    User,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserRecord {
    pub username: String,
    pub password_hash: String,
    pub role: Role,
    pub created_at: DateTime<Utc>,
}

/// Lowercase hex SHA-256 of the password bytes. Unsalted.
pub fn hash_password(password: &str) -> String {
    hex::encode(Sha256::digest(password.as_bytes()))
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct UserFile {
    users: Vec<UserRecord>,
}

pub struct UserStore {
    path: PathBuf,
    users: Mutex<Vec<UserRecord>>,
}

pub fn random_hex(bytes: usize) -> String {
    let mut buf = vec![0u8; bytes];
    rand::rngs::OsRng.fill_bytes(&mut buf);
    hex::encode(buf)
}

impl UserStore {
    pub fn open(path: &Path) -> std::io::Result<UserStore> {
        let file: UserFile = read_json(path)?.unwrap_or_default();
        Ok(UserStore { path: path.to_path_buf(), users: Mutex::new(file.users) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Vec<UserRecord>> {
        self.users.lock().unwrap_or_else(|p| p.into_inner())
    }

    pub fn is_empty(&self) -> bool {
        self.lock().is_empty()
    }

    pub fn get(&self, username: &str) -> Option<UserRecord> {
        self.lock().iter().find(|u| u.username == username).cloned()
    }

    /// Creates "admin" when the store is empty. Returns the generated
    /// password when none was supplied.
    pub fn bootstrap(&self, password: Option<&str>) -> Result<Option<String>, ApiError> {
        if !self.is_empty() {
            return Ok(None);
        }
        let generated = password.filter(|p| !p.is_empty()).is_none().then(|| random_hex(12));
        let chosen = generated.as_deref().or(password).unwrap_or_default();
        self.add(ADMIN_USERNAME, chosen, Role::Admin)?;
        Ok(generated)
    }

    pub fn add(&self, username: &str, password: &str, role: Role) -> Result<UserRecord, ApiError> {
        let username = username.trim();
        if username.is_empty() || username.len() > 64 || username.chars().any(|c| c.is_control() || c.is_whitespace()) {
            return Err(ApiError::validation("username must be 1-64 characters without whitespace"));
        }
        if password.is_empty() {
            return Err(ApiError::validation("password must not be empty"));
        }
        let mut users = self.lock();
        if users.iter().any(|u| u.username == username) {
            return Err(ApiError::conflict(format!("user {username:?} already exists")));
        }
        let record = UserRecord {
            username: username.to_string(),
            password_hash: hash_password(password),
            role,
            created_at: Utc::now(),
        };
        users.push(record.clone());
        let file = UserFile { users: users.clone() };
        if let Err(e) = write_json_atomic(&self.path, &file) {
            users.pop();
            return Err(ApiError::internal(format!("cannot save user store: {e}")));
        }
        Ok(record)
    }

    /// Same answer for unknown users and wrong passwords.
    pub fn verify(&self, username: &str, password: &str) -> Option<UserRecord> {
        let candidate = hash_password(password);
        let users = self.lock();
        let found = users.iter().find(|u| u.username == username);
        // compare against a dummy when the user is unknown so both paths do the same work
        let stored = found.map_or("0".repeat(64), |u| u.password_hash.clone());
        let equal: bool = candidate.as_bytes().ct_eq(stored.as_bytes()).into();
        found.filter(|_| equal).cloned()
    }
}
