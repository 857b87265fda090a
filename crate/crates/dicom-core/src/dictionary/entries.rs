// Generated by tools/gen_dictionary.py. Do not edit by hand.

use super::DictEntry;
use crate::tag::Tag;
use crate::vr::VR;

pub(super) static ENTRIES: [DictEntry; 671] = [
    DictEntry::new(Tag::new(0x0000, 0x0000), VR::UL, "CommandGroupLength", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0002), VR::UI, "AffectedSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0003), VR::UI, "RequestedSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0100), VR::US, "CommandField", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0110), VR::US, "MessageID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0120), VR::US, "MessageIDBeingRespondedTo", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0600), VR::AE, "MoveDestination", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0700), VR::US, "Priority", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0800), VR::US, "CommandDataSetType", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0900), VR::US, "Status", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0901), VR::AT, "OffendingElement", "1-n"),
    DictEntry::new(Tag::new(0x0000, 0x0902), VR::LO, "ErrorComment", "1"),
    DictEntry::new(Tag::new(0x0000, 0x0903), VR::US, "ErrorID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1000), VR::UI, "AffectedSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1001), VR::UI, "RequestedSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1002), VR::US, "EventTypeID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1005), VR::AT, "AttributeIdentifierList", "1-n"),
    DictEntry::new(Tag::new(0x0000, 0x1008), VR::US, "ActionTypeID", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1020), VR::US, "NumberOfRemainingSuboperations", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1021), VR::US, "NumberOfCompletedSuboperations", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1022), VR::US, "NumberOfFailedSuboperations", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1023), VR::US, "NumberOfWarningSuboperations", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1030), VR::AE, "MoveOriginatorApplicationEntityTitle", "1"),
    DictEntry::new(Tag::new(0x0000, 0x1031), VR::US, "MoveOriginatorMessageID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0000), VR::UL, "FileMetaInformationGroupLength", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0001), VR::OB, "FileMetaInformationVersion", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0002), VR::UI, "MediaStorageSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0003), VR::UI, "MediaStorageSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0010), VR::UI, "TransferSyntaxUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0012), VR::UI, "ImplementationClassUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0013), VR::SH, "ImplementationVersionName", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0016), VR::AE, "SourceApplicationEntityTitle", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0017), VR::AE, "SendingApplicationEntityTitle", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0018), VR::AE, "ReceivingApplicationEntityTitle", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0031), VR::OB, "RTVMetaInformationVersion", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0032), VR::UI, "RTVCommunicationSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0033), VR::UI, "RTVCommunicationSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0035), VR::OB, "RTVSourceIdentifier", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0036), VR::OB, "RTVFlowIdentifier", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0037), VR::UL, "RTVFlowRTPSamplingRate", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0038), VR::FD, "RTVFlowActualFrameDuration", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0100), VR::UI, "PrivateInformationCreatorUID", "1"),
    DictEntry::new(Tag::new(0x0002, 0x0102), VR::OB, "PrivateInformation", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0005), VR::CS, "SpecificCharacterSet", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0006), VR::SQ, "LanguageCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0008), VR::CS, "ImageType", "2-n"),
    DictEntry::new(Tag::new(0x0008, 0x0012), VR::DA, "InstanceCreationDate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0013), VR::TM, "InstanceCreationTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0014), VR::UI, "InstanceCreatorUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0015), VR::DT, "InstanceCoercionDateTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0016), VR::UI, "SOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0017), VR::UI, "AcquisitionUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0018), VR::UI, "SOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0019), VR::UI, "PyramidUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x001A), VR::UI, "RelatedGeneralSOPClassUID", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x001B), VR::UI, "OriginalSpecializedSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x001C), VR::CS, "SyntheticData", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0020), VR::DA, "StudyDate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0021), VR::DA, "SeriesDate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0022), VR::DA, "AcquisitionDate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0023), VR::DA, "ContentDate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x002A), VR::DT, "AcquisitionDateTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0030), VR::TM, "StudyTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0031), VR::TM, "SeriesTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0032), VR::TM, "AcquisitionTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0033), VR::TM, "ContentTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0050), VR::SH, "AccessionNumber", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0051), VR::SQ, "IssuerOfAccessionNumberSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0052), VR::CS, "QueryRetrieveLevel", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0053), VR::CS, "QueryRetrieveView", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0054), VR::AE, "RetrieveAETitle", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0055), VR::AE, "StationAETitle", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0056), VR::CS, "InstanceAvailability", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0058), VR::UI, "FailedSOPInstanceUIDList", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0060), VR::CS, "Modality", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0061), VR::CS, "ModalitiesInStudy", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0062), VR::UI, "SOPClassesInStudy", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0063), VR::SQ, "AnatomicRegionsInStudyCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0064), VR::CS, "ConversionType", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0068), VR::CS, "PresentationIntentType", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0070), VR::LO, "Manufacturer", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0080), VR::LO, "InstitutionName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0081), VR::ST, "InstitutionAddress", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0082), VR::SQ, "InstitutionCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0090), VR::PN, "ReferringPhysicianName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0092), VR::ST, "ReferringPhysicianAddress", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0094), VR::SH, "ReferringPhysicianTelephoneNumbers", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0096), VR::SQ, "ReferringPhysicianIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x009C), VR::PN, "ConsultingPhysicianName", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x009D), VR::SQ, "ConsultingPhysicianIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0100), VR::SH, "CodeValue", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0101), VR::LO, "ExtendedCodeValue", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0102), VR::SH, "CodingSchemeDesignator", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0103), VR::SH, "CodingSchemeVersion", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0104), VR::LO, "CodeMeaning", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0105), VR::CS, "MappingResource", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0106), VR::DT, "ContextGroupVersion", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0107), VR::DT, "ContextGroupLocalVersion", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0108), VR::LT, "ExtendedCodeMeaning", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0109), VR::SQ, "CodingSchemeResourcesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x010A), VR::CS, "CodingSchemeURLType", "1"),
    DictEntry::new(Tag::new(0x0008, 0x010B), VR::CS, "ContextGroupExtensionFlag", "1"),
    DictEntry::new(Tag::new(0x0008, 0x010C), VR::UI, "CodingSchemeUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x010D), VR::UI, "ContextGroupExtensionCreatorUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x010F), VR::CS, "ContextIdentifier", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0110), VR::SQ, "CodingSchemeIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0112), VR::LO, "CodingSchemeRegistry", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0114), VR::ST, "CodingSchemeExternalID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0115), VR::ST, "CodingSchemeName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0116), VR::ST, "CodingSchemeResponsibleOrganization", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0117), VR::UI, "ContextUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0118), VR::UI, "MappingResourceUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0121), VR::SQ, "EquivalentCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0122), VR::LO, "MappingResourceName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0123), VR::SQ, "ContextGroupIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0124), VR::SQ, "MappingResourceIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0201), VR::SH, "TimezoneOffsetFromUTC", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0220), VR::SQ, "ResponsibleGroupCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0221), VR::CS, "EquipmentModality", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0222), VR::LO, "ManufacturerRelatedModelGroup", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0300), VR::SQ, "PrivateDataElementCharacteristicsSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0301), VR::US, "PrivateGroupReference", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0302), VR::LO, "PrivateCreatorReference", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0303), VR::CS, "BlockIdentifyingInformationStatus", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0304), VR::US, "NonidentifyingPrivateElements", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0305), VR::SQ, "DeidentificationActionSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0306), VR::US, "IdentifyingPrivateElements", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0307), VR::CS, "DeidentificationAction", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0308), VR::US, "PrivateDataElement", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0309), VR::UL, "PrivateDataElementValueMultiplicity", "1-3"),
    DictEntry::new(Tag::new(0x0008, 0x030A), VR::CS, "PrivateDataElementValueRepresentation", "1"),
    DictEntry::new(Tag::new(0x0008, 0x030B), VR::UL, "PrivateDataElementNumberOfItems", "1-2"),
    DictEntry::new(Tag::new(0x0008, 0x0310), VR::SQ, "PrivateDataElementDefinitionSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0400), VR::SQ, "ScopeOfInventorySequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0401), VR::LT, "InventoryPurpose", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0402), VR::LT, "InventoryInstanceDescription", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0403), VR::CS, "InventoryLevel", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0404), VR::DT, "ItemInventoryDateTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0405), VR::CS, "RemovedFromOperationalUse", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0406), VR::SQ, "ReasonForRemovalCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x040A), VR::CS, "ContainerFileType", "1"),
    DictEntry::new(Tag::new(0x0008, 0x040E), VR::UI, "StoredInstanceTransferSyntaxUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x040F), VR::CS, "ExtendedMatchingMechanisms", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x0410), VR::SQ, "RangeMatchingSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0411), VR::SQ, "ListOfUIDMatchingSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0412), VR::SQ, "EmptyValueMatchingSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0413), VR::SQ, "GeneralMatchingSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0414), VR::US, "RequestedStatusInterval", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0415), VR::CS, "RetainInstances", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0416), VR::DT, "ExpirationDateTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0417), VR::CS, "TransactionStatus", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0418), VR::LT, "TransactionStatusComment", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0419), VR::SQ, "FileSetAccessSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041A), VR::SQ, "FileAccessSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041B), VR::OB, "RecordKey", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041C), VR::OB, "PriorRecordKey", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041D), VR::SQ, "MetadataSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041E), VR::SQ, "UpdatedMetadataSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x041F), VR::DT, "StudyUpdateDateTime", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0420), VR::SQ, "InventoryAccessEndPointsSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0421), VR::SQ, "StudyAccessEndPointsSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0422), VR::SQ, "IncorporatedInventoryInstanceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0423), VR::SQ, "InventoriedStudiesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0424), VR::SQ, "InventoriedSeriesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0425), VR::SQ, "InventoriedInstancesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0426), VR::CS, "InventoryCompletionStatus", "1"),
    DictEntry::new(Tag::new(0x0008, 0x0427), VR::UL, "NumberOfStudyRecordsInInstance", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1010), VR::SH, "StationName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1030), VR::LO, "StudyDescription", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1032), VR::SQ, "ProcedureCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x103E), VR::LO, "SeriesDescription", "1"),
    DictEntry::new(Tag::new(0x0008, 0x103F), VR::SQ, "SeriesDescriptionCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1040), VR::LO, "InstitutionalDepartmentName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1041), VR::SQ, "InstitutionalDepartmentTypeCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1048), VR::PN, "PhysiciansOfRecord", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1049), VR::SQ, "PhysiciansOfRecordIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1050), VR::PN, "PerformingPhysicianName", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1052), VR::SQ, "PerformingPhysicianIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1060), VR::PN, "NameOfPhysiciansReadingStudy", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1062), VR::SQ, "PhysiciansReadingStudyIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1070), VR::PN, "OperatorsName", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1072), VR::SQ, "OperatorIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1080), VR::LO, "AdmittingDiagnosesDescription", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1084), VR::SQ, "AdmittingDiagnosesCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1088), VR::LO, "PyramidDescription", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1090), VR::LO, "ManufacturerModelName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1110), VR::SQ, "ReferencedStudySequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1111), VR::SQ, "ReferencedPerformedProcedureStepSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1112), VR::SQ, "ReferencedInstancesBySOPClassSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1115), VR::SQ, "ReferencedSeriesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1120), VR::SQ, "ReferencedPatientSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1125), VR::SQ, "ReferencedVisitSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1134), VR::SQ, "ReferencedStereometricInstanceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x113A), VR::SQ, "ReferencedWaveformSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1140), VR::SQ, "ReferencedImageSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x114A), VR::SQ, "ReferencedInstanceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x114B), VR::SQ, "ReferencedRealWorldValueMappingInstanceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1150), VR::UI, "ReferencedSOPClassUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1155), VR::UI, "ReferencedSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1156), VR::SQ, "DefinitionSourceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x115A), VR::UI, "SOPClassesSupported", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1160), VR::IS, "ReferencedFrameNumber", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1161), VR::UL, "SimpleFrameList", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x1162), VR::UL, "CalculatedFrameList", "3-3n"),
    DictEntry::new(Tag::new(0x0008, 0x1163), VR::FD, "TimeRange", "2"),
    DictEntry::new(Tag::new(0x0008, 0x1164), VR::SQ, "FrameExtractionSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1167), VR::UI, "MultiFrameSourceSOPInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1195), VR::UI, "TransactionUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1196), VR::US, "WarningReason", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1197), VR::US, "FailureReason", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1198), VR::SQ, "FailedSOPSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1199), VR::SQ, "ReferencedSOPSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x119A), VR::SQ, "OtherFailuresSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x119B), VR::SQ, "FailedStudySequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1200), VR::SQ, "StudiesContainingOtherReferencedInstancesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x1250), VR::SQ, "RelatedSeriesSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2111), VR::ST, "DerivationDescription", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2112), VR::SQ, "SourceImageSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2120), VR::SH, "StageName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2122), VR::IS, "StageNumber", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2124), VR::IS, "NumberOfStages", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2127), VR::SH, "ViewName", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2128), VR::IS, "ViewNumber", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2129), VR::IS, "NumberOfEventTimers", "1"),
    DictEntry::new(Tag::new(0x0008, 0x212A), VR::IS, "NumberOfViewsInStage", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2130), VR::DS, "EventElapsedTimes", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x2132), VR::LO, "EventTimerNames", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x2133), VR::SQ, "EventTimerSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2134), VR::FD, "EventTimeOffset", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2135), VR::SQ, "EventCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2142), VR::IS, "StartTrim", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2143), VR::IS, "StopTrim", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2144), VR::IS, "RecommendedDisplayFrameRate", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2218), VR::SQ, "AnatomicRegionSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2220), VR::SQ, "AnatomicRegionModifierSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2228), VR::SQ, "PrimaryAnatomicStructureSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x2230), VR::SQ, "PrimaryAnatomicStructureModifierSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x3001), VR::SQ, "AlternateRepresentationSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x3002), VR::UI, "AvailableTransferSyntaxUID", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x3010), VR::UI, "IrradiationEventUID", "1-n"),
    DictEntry::new(Tag::new(0x0008, 0x3011), VR::SQ, "SourceIrradiationEventSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x3012), VR::UI, "RadiopharmaceuticalAdministrationEventUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9007), VR::CS, "FrameType", "4-5"),
    DictEntry::new(Tag::new(0x0008, 0x9092), VR::SQ, "ReferencedImageEvidenceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9121), VR::SQ, "ReferencedRawDataSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9123), VR::UI, "CreatorVersionUID", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9124), VR::SQ, "DerivationImageSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9154), VR::SQ, "SourceImageEvidenceSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9205), VR::CS, "PixelPresentation", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9206), VR::CS, "VolumetricProperties", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9207), VR::CS, "VolumeBasedCalculationTechnique", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9208), VR::CS, "ComplexImageComponent", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9209), VR::CS, "AcquisitionContrast", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9215), VR::SQ, "DerivationCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9237), VR::SQ, "ReferencedPresentationStateSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9410), VR::SQ, "ReferencedOtherPlaneSequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9458), VR::SQ, "FrameDisplaySequence", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9459), VR::FL, "RecommendedDisplayFrameRateInFloat", "1"),
    DictEntry::new(Tag::new(0x0008, 0x9460), VR::CS, "SkipFrameRangeFlag", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0010), VR::PN, "PatientName", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0020), VR::LO, "PatientID", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0021), VR::LO, "IssuerOfPatientID", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0022), VR::CS, "TypeOfPatientID", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0024), VR::SQ, "IssuerOfPatientIDQualifiersSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0026), VR::SQ, "SourcePatientGroupIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0027), VR::SQ, "GroupOfPatientsIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0028), VR::US, "SubjectRelativePositionInImage", "3"),
    DictEntry::new(Tag::new(0x0010, 0x0030), VR::DA, "PatientBirthDate", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0032), VR::TM, "PatientBirthTime", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0033), VR::LO, "PatientBirthDateInAlternativeCalendar", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0034), VR::LO, "PatientDeathDateInAlternativeCalendar", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0035), VR::CS, "PatientAlternativeCalendar", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0040), VR::CS, "PatientSex", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0050), VR::SQ, "PatientInsurancePlanCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0101), VR::SQ, "PatientPrimaryLanguageCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0102), VR::SQ, "PatientPrimaryLanguageModifierCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0200), VR::CS, "QualityControlSubject", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0201), VR::SQ, "QualityControlSubjectTypeCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0213), VR::LO, "StrainNomenclature", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0214), VR::LO, "StrainStockNumber", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0215), VR::SQ, "StrainSourceRegistryCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0216), VR::SQ, "StrainStockSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0217), VR::LO, "StrainSource", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0219), VR::SQ, "StrainCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0221), VR::SQ, "GeneticModificationsSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0223), VR::LO, "GeneticModificationsNomenclature", "1"),
    DictEntry::new(Tag::new(0x0010, 0x0229), VR::SQ, "GeneticModificationsCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1001), VR::PN, "OtherPatientNames", "1-n"),
    DictEntry::new(Tag::new(0x0010, 0x1002), VR::SQ, "OtherPatientIDsSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1005), VR::PN, "PatientBirthName", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1010), VR::AS, "PatientAge", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1020), VR::DS, "PatientSize", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1021), VR::SQ, "PatientSizeCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1022), VR::DS, "PatientBodyMassIndex", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1023), VR::DS, "MeasuredAPDimension", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1024), VR::DS, "MeasuredLateralDimension", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1030), VR::DS, "PatientWeight", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1040), VR::LO, "PatientAddress", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1060), VR::PN, "PatientMotherBirthName", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1080), VR::LO, "MilitaryRank", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1081), VR::LO, "BranchOfService", "1"),
    DictEntry::new(Tag::new(0x0010, 0x1100), VR::SQ, "ReferencedPatientPhotoSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2000), VR::LO, "MedicalAlerts", "1-n"),
    DictEntry::new(Tag::new(0x0010, 0x2110), VR::LO, "Allergies", "1-n"),
    DictEntry::new(Tag::new(0x0010, 0x2150), VR::LO, "CountryOfResidence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2152), VR::LO, "RegionOfResidence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2154), VR::SH, "PatientTelephoneNumbers", "1-n"),
    DictEntry::new(Tag::new(0x0010, 0x2155), VR::LT, "PatientTelecomInformation", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2160), VR::SH, "EthnicGroup", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2161), VR::SQ, "EthnicGroupCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2180), VR::SH, "Occupation", "1"),
    DictEntry::new(Tag::new(0x0010, 0x21A0), VR::CS, "SmokingStatus", "1"),
    DictEntry::new(Tag::new(0x0010, 0x21B0), VR::LT, "AdditionalPatientHistory", "1"),
    DictEntry::new(Tag::new(0x0010, 0x21C0), VR::US, "PregnancyStatus", "1"),
    DictEntry::new(Tag::new(0x0010, 0x21D0), VR::DA, "LastMenstrualDate", "1"),
    DictEntry::new(Tag::new(0x0010, 0x21F0), VR::LO, "PatientReligiousPreference", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2201), VR::LO, "PatientSpeciesDescription", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2202), VR::SQ, "PatientSpeciesCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2203), VR::CS, "PatientSexNeutered", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2210), VR::CS, "AnatomicalOrientationType", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2292), VR::LO, "PatientBreedDescription", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2293), VR::SQ, "PatientBreedCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2294), VR::SQ, "BreedRegistrationSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2295), VR::LO, "BreedRegistrationNumber", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2296), VR::SQ, "BreedRegistryCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2297), VR::PN, "ResponsiblePerson", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2298), VR::CS, "ResponsiblePersonRole", "1"),
    DictEntry::new(Tag::new(0x0010, 0x2299), VR::LO, "ResponsibleOrganization", "1"),
    DictEntry::new(Tag::new(0x0010, 0x4000), VR::LT, "PatientComments", "1"),
    DictEntry::new(Tag::new(0x0010, 0x9431), VR::FL, "ExaminedBodyThickness", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0010), VR::LO, "ContrastBolusAgent", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0015), VR::CS, "BodyPartExamined", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0020), VR::CS, "ScanningSequence", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x0021), VR::CS, "SequenceVariant", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x0022), VR::CS, "ScanOptions", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x0023), VR::CS, "MRAcquisitionType", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0024), VR::SH, "SequenceName", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0050), VR::DS, "SliceThickness", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0060), VR::DS, "KVP", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0080), VR::DS, "RepetitionTime", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0081), VR::DS, "EchoTime", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0082), VR::DS, "InversionTime", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0083), VR::DS, "NumberOfAverages", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0084), VR::DS, "ImagingFrequency", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0087), VR::DS, "MagneticFieldStrength", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0088), VR::DS, "SpacingBetweenSlices", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0090), VR::DS, "DataCollectionDiameter", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0091), VR::IS, "EchoTrainLength", "1"),
    DictEntry::new(Tag::new(0x0018, 0x0095), VR::DS, "PixelBandwidth", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1000), VR::LO, "DeviceSerialNumber", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1020), VR::LO, "SoftwareVersions", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x1030), VR::LO, "ProtocolName", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1041), VR::DS, "ContrastBolusVolume", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1100), VR::DS, "ReconstructionDiameter", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1110), VR::DS, "DistanceSourceToDetector", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1111), VR::DS, "DistanceSourceToPatient", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1120), VR::DS, "GantryDetectorTilt", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1130), VR::DS, "TableHeight", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1140), VR::CS, "RotationDirection", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1150), VR::IS, "ExposureTime", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1151), VR::IS, "XRayTubeCurrent", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1152), VR::IS, "Exposure", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1160), VR::SH, "FilterType", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1164), VR::DS, "ImagerPixelSpacing", "2"),
    DictEntry::new(Tag::new(0x0018, 0x1170), VR::IS, "GeneratorPower", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1190), VR::DS, "FocalSpots", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x1210), VR::SH, "ConvolutionKernel", "1-n"),
    DictEntry::new(Tag::new(0x0018, 0x1250), VR::SH, "ReceiveCoilName", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1251), VR::SH, "TransmitCoilName", "1"),
    DictEntry::new(Tag::new(0x0018, 0x1310), VR::US, "AcquisitionMatrix", "4"),
    DictEntry::new(Tag::new(0x0018, 0x1314), VR::DS, "FlipAngle", "1"),
    DictEntry::new(Tag::new(0x0018, 0x5100), VR::CS, "PatientPosition", "1"),
    DictEntry::new(Tag::new(0x0018, 0x5101), VR::CS, "ViewPosition", "1"),
    DictEntry::new(Tag::new(0x0020, 0x000D), VR::UI, "StudyInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x000E), VR::UI, "SeriesInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0010), VR::SH, "StudyID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0011), VR::IS, "SeriesNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0012), VR::IS, "AcquisitionNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0013), VR::IS, "InstanceNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0019), VR::IS, "ItemNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0020), VR::CS, "PatientOrientation", "2"),
    DictEntry::new(Tag::new(0x0020, 0x0027), VR::LO, "PyramidLabel", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0032), VR::DS, "ImagePositionPatient", "3"),
    DictEntry::new(Tag::new(0x0020, 0x0037), VR::DS, "ImageOrientationPatient", "6"),
    DictEntry::new(Tag::new(0x0020, 0x0052), VR::UI, "FrameOfReferenceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0060), VR::CS, "Laterality", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0062), VR::CS, "ImageLaterality", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0100), VR::IS, "TemporalPositionIdentifier", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0105), VR::IS, "NumberOfTemporalPositions", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0110), VR::DS, "TemporalResolution", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0200), VR::UI, "SynchronizationFrameOfReferenceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x0242), VR::UI, "SOPInstanceUIDOfConcatenationSource", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1002), VR::IS, "ImagesInAcquisition", "1"),
    DictEntry::new(Tag::new(0x0020, 0x103F), VR::LO, "TargetPositionReferenceIndicator", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1040), VR::LO, "PositionReferenceIndicator", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1041), VR::DS, "SliceLocation", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1200), VR::IS, "NumberOfPatientRelatedStudies", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1202), VR::IS, "NumberOfPatientRelatedSeries", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1204), VR::IS, "NumberOfPatientRelatedInstances", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1206), VR::IS, "NumberOfStudyRelatedSeries", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1208), VR::IS, "NumberOfStudyRelatedInstances", "1"),
    DictEntry::new(Tag::new(0x0020, 0x1209), VR::IS, "NumberOfSeriesRelatedInstances", "1"),
    DictEntry::new(Tag::new(0x0020, 0x4000), VR::LT, "ImageComments", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9056), VR::SH, "StackID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9057), VR::UL, "InStackPositionNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9071), VR::SQ, "FrameAnatomySequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9072), VR::CS, "FrameLaterality", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9111), VR::SQ, "FrameContentSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9113), VR::SQ, "PlanePositionSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9116), VR::SQ, "PlaneOrientationSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9128), VR::UL, "TemporalPositionIndex", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9153), VR::FD, "NominalCardiacTriggerDelayTime", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9154), VR::FL, "NominalCardiacTriggerTimePriorToRPeak", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9155), VR::FL, "ActualCardiacTriggerTimePriorToRPeak", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9156), VR::US, "FrameAcquisitionNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9157), VR::UL, "DimensionIndexValues", "1-n"),
    DictEntry::new(Tag::new(0x0020, 0x9158), VR::LT, "FrameComments", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9161), VR::UI, "ConcatenationUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9162), VR::US, "InConcatenationNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9163), VR::US, "InConcatenationTotalNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9164), VR::UI, "DimensionOrganizationUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9165), VR::AT, "DimensionIndexPointer", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9167), VR::AT, "FunctionalGroupPointer", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9170), VR::SQ, "UnassignedSharedConvertedAttributesSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9171), VR::SQ, "UnassignedPerFrameConvertedAttributesSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9172), VR::SQ, "ConversionSourceAttributesSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9213), VR::LO, "DimensionIndexPrivateCreator", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9221), VR::SQ, "DimensionOrganizationSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9222), VR::SQ, "DimensionIndexSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9228), VR::UL, "ConcatenationFrameOffsetNumber", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9238), VR::LO, "FunctionalGroupPrivateCreator", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9241), VR::FL, "NominalPercentageOfCardiacPhase", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9245), VR::FL, "NominalPercentageOfRespiratoryPhase", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9246), VR::FL, "StartingRespiratoryAmplitude", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9247), VR::CS, "StartingRespiratoryPhase", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9248), VR::FL, "EndingRespiratoryAmplitude", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9249), VR::CS, "EndingRespiratoryPhase", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9250), VR::CS, "RespiratoryTriggerType", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9251), VR::FD, "RRIntervalTimeNominal", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9252), VR::FD, "ActualCardiacTriggerDelayTime", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9253), VR::SQ, "RespiratorySynchronizationSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9254), VR::FD, "RespiratoryIntervalTime", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9255), VR::FD, "NominalRespiratoryTriggerDelayTime", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9256), VR::FD, "RespiratoryTriggerDelayThreshold", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9257), VR::FD, "ActualRespiratoryTriggerDelayTime", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9301), VR::FD, "ImagePositionVolume", "3"),
    DictEntry::new(Tag::new(0x0020, 0x9302), VR::FD, "ImageOrientationVolume", "6"),
    DictEntry::new(Tag::new(0x0020, 0x9307), VR::CS, "UltrasoundAcquisitionGeometry", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9308), VR::FD, "ApexPosition", "3"),
    DictEntry::new(Tag::new(0x0020, 0x9309), VR::FD, "VolumeToTransducerMappingMatrix", "16"),
    DictEntry::new(Tag::new(0x0020, 0x930A), VR::FD, "VolumeToTableMappingMatrix", "16"),
    DictEntry::new(Tag::new(0x0020, 0x930B), VR::CS, "VolumeToTransducerRelationship", "1"),
    DictEntry::new(Tag::new(0x0020, 0x930C), VR::CS, "PatientFrameOfReferenceSource", "1"),
    DictEntry::new(Tag::new(0x0020, 0x930D), VR::FD, "TemporalPositionTimeOffset", "1"),
    DictEntry::new(Tag::new(0x0020, 0x930E), VR::SQ, "PlanePositionVolumeSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x930F), VR::SQ, "PlaneOrientationVolumeSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9310), VR::SQ, "TemporalPositionSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9311), VR::CS, "DimensionOrganizationType", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9312), VR::UI, "VolumeFrameOfReferenceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9313), VR::UI, "TableFrameOfReferenceUID", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9421), VR::LO, "DimensionDescriptionLabel", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9450), VR::SQ, "PatientOrientationInFrameSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9453), VR::LO, "FrameLabel", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9518), VR::US, "AcquisitionIndex", "1-n"),
    DictEntry::new(Tag::new(0x0020, 0x9529), VR::SQ, "ContributingSOPInstancesReferenceSequence", "1"),
    DictEntry::new(Tag::new(0x0020, 0x9536), VR::US, "ReconstructionIndex", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0002), VR::US, "SamplesPerPixel", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0003), VR::US, "SamplesPerPixelUsed", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0004), VR::CS, "PhotometricInterpretation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0006), VR::US, "PlanarConfiguration", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0008), VR::IS, "NumberOfFrames", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0009), VR::AT, "FrameIncrementPointer", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x000A), VR::AT, "FrameDimensionPointer", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x0010), VR::US, "Rows", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0011), VR::US, "Columns", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0014), VR::US, "UltrasoundColorDataPresent", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0030), VR::DS, "PixelSpacing", "2"),
    DictEntry::new(Tag::new(0x0028, 0x0031), VR::DS, "ZoomFactor", "2"),
    DictEntry::new(Tag::new(0x0028, 0x0032), VR::DS, "ZoomCenter", "2"),
    DictEntry::new(Tag::new(0x0028, 0x0034), VR::IS, "PixelAspectRatio", "2"),
    DictEntry::new(Tag::new(0x0028, 0x0051), VR::CS, "CorrectedImage", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x0100), VR::US, "BitsAllocated", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0101), VR::US, "BitsStored", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0102), VR::US, "HighBit", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0103), VR::US, "PixelRepresentation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0106), VR::US, "SmallestImagePixelValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0107), VR::US, "LargestImagePixelValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0108), VR::US, "SmallestPixelValueInSeries", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0109), VR::US, "LargestPixelValueInSeries", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0120), VR::US, "PixelPaddingValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0121), VR::US, "PixelPaddingRangeLimit", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0122), VR::FL, "FloatPixelPaddingValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0123), VR::FD, "DoubleFloatPixelPaddingValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0124), VR::FL, "FloatPixelPaddingRangeLimit", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0125), VR::FD, "DoubleFloatPixelPaddingRangeLimit", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0300), VR::CS, "QualityControlImage", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0301), VR::CS, "BurnedInAnnotation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0302), VR::CS, "RecognizableVisualFeatures", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0303), VR::CS, "LongitudinalTemporalInformationModified", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0304), VR::UI, "ReferencedColorPaletteInstanceUID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0A02), VR::CS, "PixelSpacingCalibrationType", "1"),
    DictEntry::new(Tag::new(0x0028, 0x0A04), VR::LO, "PixelSpacingCalibrationDescription", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1040), VR::CS, "PixelIntensityRelationship", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1041), VR::SS, "PixelIntensityRelationshipSign", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1050), VR::DS, "WindowCenter", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x1051), VR::DS, "WindowWidth", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x1052), VR::DS, "RescaleIntercept", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1053), VR::DS, "RescaleSlope", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1054), VR::LO, "RescaleType", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1055), VR::LO, "WindowCenterWidthExplanation", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x1056), VR::CS, "VOILUTFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1090), VR::CS, "RecommendedViewingMode", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1101), VR::US, "RedPaletteColorLookupTableDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x1102), VR::US, "GreenPaletteColorLookupTableDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x1103), VR::US, "BluePaletteColorLookupTableDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x1104), VR::US, "AlphaPaletteColorLookupTableDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x1199), VR::UI, "PaletteColorLookupTableUID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1201), VR::OW, "RedPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1202), VR::OW, "GreenPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1203), VR::OW, "BluePaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1204), VR::OW, "AlphaPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1221), VR::OW, "SegmentedRedPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1222), VR::OW, "SegmentedGreenPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1223), VR::OW, "SegmentedBluePaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1224), VR::OW, "SegmentedAlphaPaletteColorLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1230), VR::SQ, "StoredValueColorRangeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1231), VR::FD, "MinimumStoredValueMapped", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1232), VR::FD, "MaximumStoredValueMapped", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1300), VR::CS, "BreastImplantPresent", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1350), VR::CS, "PartialView", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1351), VR::ST, "PartialViewDescription", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1352), VR::SQ, "PartialViewCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x135A), VR::CS, "SpatialLocationsPreserved", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1401), VR::SQ, "DataFrameAssignmentSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1402), VR::CS, "DataPathAssignment", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1403), VR::US, "BitsMappedToColorLookupTable", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1404), VR::SQ, "BlendingLUT1Sequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1405), VR::CS, "BlendingLUT1TransferFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1406), VR::FD, "BlendingWeightConstant", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1407), VR::US, "BlendingLookupTableDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x1408), VR::OW, "BlendingLookupTableData", "1"),
    DictEntry::new(Tag::new(0x0028, 0x140B), VR::SQ, "EnhancedPaletteColorLookupTableSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x140C), VR::SQ, "BlendingLUT2Sequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x140D), VR::CS, "BlendingLUT2TransferFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x140E), VR::CS, "DataPathID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x140F), VR::CS, "RGBLUTTransferFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x1410), VR::CS, "AlphaLUTTransferFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x2000), VR::OB, "ICCProfile", "1"),
    DictEntry::new(Tag::new(0x0028, 0x2002), VR::CS, "ColorSpace", "1"),
    DictEntry::new(Tag::new(0x0028, 0x2110), VR::CS, "LossyImageCompression", "1"),
    DictEntry::new(Tag::new(0x0028, 0x2112), VR::DS, "LossyImageCompressionRatio", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x2114), VR::CS, "LossyImageCompressionMethod", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x3000), VR::SQ, "ModalityLUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x3001), VR::SQ, "VariableModalityLUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x3002), VR::US, "LUTDescriptor", "3"),
    DictEntry::new(Tag::new(0x0028, 0x3003), VR::LO, "LUTExplanation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x3004), VR::LO, "ModalityLUTType", "1"),
    DictEntry::new(Tag::new(0x0028, 0x3006), VR::US, "LUTData", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x3010), VR::SQ, "VOILUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x3110), VR::SQ, "SoftcopyVOILUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6010), VR::US, "RepresentativeFrameNumber", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6020), VR::US, "FrameNumbersOfInterest", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x6022), VR::LO, "FrameOfInterestDescription", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x6023), VR::CS, "FrameOfInterestType", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x6040), VR::US, "RWavePointer", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x6100), VR::SQ, "MaskSubtractionSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6101), VR::CS, "MaskOperation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6102), VR::US, "ApplicableFrameRange", "2-2n"),
    DictEntry::new(Tag::new(0x0028, 0x6110), VR::US, "MaskFrameNumbers", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x6112), VR::US, "ContrastFrameAveraging", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6114), VR::FL, "MaskSubPixelShift", "2"),
    DictEntry::new(Tag::new(0x0028, 0x6120), VR::SS, "TIDOffset", "1"),
    DictEntry::new(Tag::new(0x0028, 0x6190), VR::ST, "MaskOperationExplanation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7000), VR::SQ, "EquipmentAdministratorSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7001), VR::US, "NumberOfDisplaySubsystems", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7002), VR::US, "CurrentConfigurationID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7003), VR::US, "DisplaySubsystemID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7004), VR::SH, "DisplaySubsystemName", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7005), VR::LO, "DisplaySubsystemDescription", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7006), VR::CS, "SystemStatus", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7007), VR::LO, "SystemStatusComment", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7008), VR::SQ, "TargetLuminanceCharacteristicsSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7009), VR::US, "LuminanceCharacteristicsID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700A), VR::SQ, "DisplaySubsystemConfigurationSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700B), VR::US, "ConfigurationID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700C), VR::SH, "ConfigurationName", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700D), VR::LO, "ConfigurationDescription", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700E), VR::US, "ReferencedTargetLuminanceCharacteristicsID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x700F), VR::SQ, "QAResultsSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7010), VR::SQ, "DisplaySubsystemQAResultsSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7011), VR::SQ, "ConfigurationQAResultsSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7012), VR::SQ, "MeasurementEquipmentSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7013), VR::CS, "MeasurementFunctions", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x7014), VR::CS, "MeasurementEquipmentType", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7015), VR::SQ, "VisualEvaluationResultSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7016), VR::SQ, "DisplayCalibrationResultSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7017), VR::US, "DDLValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7018), VR::FL, "CIExyWhitePoint", "2"),
    DictEntry::new(Tag::new(0x0028, 0x7019), VR::CS, "DisplayFunctionType", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701A), VR::FL, "GammaValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701B), VR::US, "NumberOfLuminancePoints", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701C), VR::SQ, "LuminanceResponseSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701D), VR::FL, "TargetMinimumLuminance", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701E), VR::FL, "TargetMaximumLuminance", "1"),
    DictEntry::new(Tag::new(0x0028, 0x701F), VR::FL, "LuminanceValue", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7020), VR::LO, "LuminanceResponseDescription", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7021), VR::CS, "WhitePointFlag", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7022), VR::SQ, "DisplayDeviceTypeCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7023), VR::SQ, "DisplaySubsystemSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7024), VR::SQ, "LuminanceResultSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7025), VR::CS, "AmbientLightValueSource", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7026), VR::CS, "MeasuredCharacteristics", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x7027), VR::SQ, "LuminanceUniformityResultSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7028), VR::SQ, "VisualEvaluationTestSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x7029), VR::CS, "TestResult", "1"),
    DictEntry::new(Tag::new(0x0028, 0x702A), VR::LO, "TestResultComment", "1"),
    DictEntry::new(Tag::new(0x0028, 0x702B), VR::CS, "TestImageValidation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x702C), VR::SQ, "TestPatternCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x702D), VR::SQ, "MeasurementPatternCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x702E), VR::SQ, "VisualEvaluationMethodCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9001), VR::UL, "DataPointRows", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9002), VR::UL, "DataPointColumns", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9003), VR::CS, "SignalDomainColumns", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9108), VR::CS, "DataRepresentation", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9110), VR::SQ, "PixelMeasuresSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9132), VR::SQ, "FrameVOILUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9145), VR::SQ, "PixelValueTransformationSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9235), VR::CS, "SignalDomainRows", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9411), VR::FL, "DisplayFilterPercentage", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9415), VR::SQ, "FramePixelShiftSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9416), VR::US, "SubtractionItemID", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9422), VR::SQ, "PixelIntensityRelationshipLUTSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9443), VR::SQ, "FramePixelDataPropertiesSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9444), VR::CS, "GeometricalProperties", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9445), VR::FL, "GeometricMaximumDistortion", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9446), VR::CS, "ImageProcessingApplied", "1-n"),
    DictEntry::new(Tag::new(0x0028, 0x9454), VR::CS, "MaskSelectionMode", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9474), VR::CS, "LUTFunction", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9478), VR::FL, "MaskVisibilityPercentage", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9501), VR::SQ, "PixelShiftSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9502), VR::SQ, "RegionPixelShiftSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9503), VR::SS, "VerticesOfTheRegion", "2-2n"),
    DictEntry::new(Tag::new(0x0028, 0x9505), VR::SQ, "MultiFramePresentationSequence", "1"),
    DictEntry::new(Tag::new(0x0028, 0x9506), VR::US, "PixelShiftFrameRange", "2-2n"),
    DictEntry::new(Tag::new(0x0028, 0x9507), VR::US, "LUTFrameRange", "2-2n"),
    DictEntry::new(Tag::new(0x0028, 0x9520), VR::DS, "ImageToEquipmentMappingMatrix", "16"),
    DictEntry::new(Tag::new(0x0028, 0x9537), VR::CS, "EquipmentCoordinateSystemIdentification", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1031), VR::SQ, "RequestingPhysicianIdentificationSequence", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1032), VR::PN, "RequestingPhysician", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1033), VR::LO, "RequestingService", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1034), VR::SQ, "RequestingServiceCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1060), VR::LO, "RequestedProcedureDescription", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1064), VR::SQ, "RequestedProcedureCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1065), VR::SQ, "RequestedLateralityCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1067), VR::SQ, "ReasonForVisitCodeSequence", "1"),
    DictEntry::new(Tag::new(0x0032, 0x1070), VR::LO, "RequestedContrastAgent", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0001), VR::AE, "ScheduledStationAETitle", "1-n"),
    DictEntry::new(Tag::new(0x0040, 0x0002), VR::DA, "ScheduledProcedureStepStartDate", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0003), VR::TM, "ScheduledProcedureStepStartTime", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0006), VR::PN, "ScheduledPerformingPhysicianName", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0007), VR::LO, "ScheduledProcedureStepDescription", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0009), VR::SH, "ScheduledProcedureStepID", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0100), VR::SQ, "ScheduledProcedureStepSequence", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0244), VR::DA, "PerformedProcedureStepStartDate", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0245), VR::TM, "PerformedProcedureStepStartTime", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0253), VR::SH, "PerformedProcedureStepID", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0254), VR::LO, "PerformedProcedureStepDescription", "1"),
    DictEntry::new(Tag::new(0x0040, 0x0275), VR::SQ, "RequestAttributesSequence", "1"),
    DictEntry::new(Tag::new(0x0040, 0x1001), VR::SH, "RequestedProcedureID", "1"),
    DictEntry::new(Tag::new(0x0040, 0x1002), VR::LO, "ReasonForTheRequestedProcedure", "1"),
    DictEntry::new(Tag::new(0x7FE0, 0x0010), VR::OB, "PixelData", "1"),
];
