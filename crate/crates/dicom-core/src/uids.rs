//! Well-known UIDs.

pub const IMPLICIT_VR_LITTLE_ENDIAN: &str = "1.2.840.10008.1.2";
pub const EXPLICIT_VR_LITTLE_ENDIAN: &str = "1.2.840.10008.1.2.1";

pub const APPLICATION_CONTEXT: &str = "1.2.840.10008.3.1.1.1";

pub const VERIFICATION: &str = "1.2.840.10008.1.1";
pub const STUDY_ROOT_QR_FIND: &str = "1.2.840.10008.5.1.4.1.2.2.1";
pub const STUDY_ROOT_QR_MOVE: &str = "1.2.840.10008.5.1.4.1.2.2.2";

/// Prefix shared by the storage SOP classes.
pub const STORAGE_PREFIX: &str = "1.2.840.10008.5.1.4.1.1.";
pub const CT_IMAGE_STORAGE: &str = "1.2.840.10008.5.1.4.1.1.2";
pub const MR_IMAGE_STORAGE: &str = "1.2.840.10008.5.1.4.1.1.4";
pub const SECONDARY_CAPTURE_IMAGE_STORAGE: &str = "1.2.840.10008.5.1.4.1.1.7";

/// Implementation class UID written into file meta and association requests.
pub const IMPLEMENTATION_CLASS_UID: &str = "2.25.81582611392906821869339515290011183039";
pub const IMPLEMENTATION_VERSION_NAME: &str = "BRIDGE_010";

/// UIDs are dot-separated runs of digits, at most 64 characters.
pub fn is_valid_uid(uid: &str) -> bool {
    !uid.is_empty()
        && uid.len() <= 64
        && uid
            .split('.')
            .all(|part| !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit()))
}
