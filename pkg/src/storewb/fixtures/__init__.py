"""Bundled college-ERP engagement fixture.

One source of truth for the worked example that ships with the package: the
entity tables, a programmatic builder that drives the real workflow engine,
and the equivalent CLI command script. CIA facets, asset priorities and the
DREAD component vectors are authored values chosen to reproduce the
engagement's recorded averages exactly; everything else is carried over
verbatim from the engagement records.
"""

from __future__ import annotations

import shlex
from datetime import datetime, timezone
from pathlib import Path

from importlib.resources import files

from .. import catalog as catalog_mod
from .. import docgen, risk, workflow
from ..model import (
    Agreement,
    Asset,
    AssetPriority,
    AttackPoint,
    CiaFacet,
    Goal,
    PointKind,
    Project,
    RiskAssessment,
    RiskMethod,
    Stakeholder,
    StakeholderGroup,
    StakeholderPriority,
    Threat,
    ValidationRecord,
    ValidationVerdict,
    Stride,
)

PROJECT_ID = "erp-college-fixture"
PROJECT_NAME = "College ERP System"
REVIEWER_ID = "SH4"
GENERATED_AT = datetime(2020, 1, 1, 0, 0, 0, tzinfo=timezone.utc)
SRS_DOCUMENT_PATH = "srs.md"

GOALS = (
    ("G1", "The college ERP system will be installed on a web server that has been secured to protect confidential information. All security patches for the web server must be enabled"),
    ("G2", "The college ERP system will also be installed on a database server that has been secured. All security patches for the database server must be enabled"),
    ("G3", "The database server must be protected from the direct access from the internet by a firewall"),
    ("G4", "The Web server should be protected from direct access from the internet by a firewall"),
    ("G5", "Only HTTP and HTTPS ports allowed direct access from the internet"),
    ("G6", "Communication between the web server and database server should be conducted over a private network"),
    ("G7", "The college ERP system should be deployed over HTTPS"),
)

STAKEHOLDERS = (
    ("SH1", "President", StakeholderGroup.MANAGERIAL, StakeholderPriority.CRITICAL),
    ("SH2", "Director", StakeholderGroup.MANAGERIAL, StakeholderPriority.CRITICAL),
    ("SH3", "Senior Executives", StakeholderGroup.MANAGERIAL, StakeholderPriority.MAJOR),
    ("SH4", "Internal Auditor", StakeholderGroup.MARKETING, StakeholderPriority.CRITICAL),
    ("SH5", "Purchasing Manager", StakeholderGroup.MARKETING, StakeholderPriority.CRITICAL),
    ("SH6", "Key users", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.MAJOR),
    ("SH7", "End users", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.CRITICAL),
    ("SH8", "ERP Project manager", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.CRITICAL),
    ("SH9", "Database administrator", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.CRITICAL),
    ("SH10", "Developer", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.CRITICAL),
    ("SH11", "Networking team", StakeholderGroup.INFORMATION_SYSTEM, StakeholderPriority.MAJOR),
)

C, I, A = CiaFacet.CONFIDENTIALITY, CiaFacet.INTEGRITY, CiaFacet.AVAILABILITY

ASSETS = (
    ("A1", "Student, staff, and admin", "An asset that relates to a student, staff or admin", (C, I), AssetPriority.HIGH),
    ("A2", "Student's login data", "The student's credentials: username and password", (C, I), AssetPriority.HIGH),
    ("A3", "Staff login data", "The staff's credentials: username and password", (C, I), AssetPriority.HIGH),
    ("A4", "Admin login data", "The admin's credentials: username and password", (C, I), AssetPriority.HIGH),
    ("A5", "Student's personal data", "The personal data that the student enters, such as student record and assets", (C, I), AssetPriority.HIGH),
    ("A6", "Staff's personal data", "The personal data that the staff enters, such as staff record and assets", (C, I), AssetPriority.HIGH),
    ("A7", "System", "Assets that relate to the essential system", (C, I, A), AssetPriority.MEDIUM),
    ("A8", "Availability of ERP System", "If the college ERP system goes down, student/and staff cannot request or receive quotes", (A,), AssetPriority.HIGH),
    ("A9", "Process", "Assets that relate to the process of running the web application", (I, A), AssetPriority.MEDIUM),
    ("A10", "Application", "Assets that relate to the web application", (I, A), AssetPriority.MEDIUM),
    ("A11", "Login Session", "The web session associated with a logged in student, staff or admin", (C, I), AssetPriority.HIGH),
    ("A12", "Backend database access", "The ability to interact with the database that stores, student's data, staff data, and login credentials", (C, I, A), AssetPriority.HIGH),
    ("A13", "Student fee details", "The student's fee record must be secure. Tampering with this data could cause the loss of college", (I,), AssetPriority.HIGH),
    ("A14", "Staff salary details", "The staff salary record must be secure. Tampering with this data could cause the loss of college", (I,), AssetPriority.HIGH),
    ("A15", "Message Notification", "The message notification contains the information for students and staff", (I, A), AssetPriority.MEDIUM),
    ("A16", "Audit data", "Attackers might try to attack the system without being logged or audited", (I,), AssetPriority.MEDIUM),
    ("A17", "Access to the record", "Only authorized people should be able to view his/her record", (C,), AssetPriority.HIGH),
)

ATTACK_POINTS = (
    ("PA1", PointKind.POA, "Web Server Listening Port (HTTPS)", "The port (HTTPS) that the web server listens on"),
    ("PA2", PointKind.POA, "Login Page", "Page for students or staff to create a login and perform a login to the site to begin requesting or reviewing records"),
    ("PA3", PointKind.POA, "CreateLogin function", "Creates a new student or staff login (Admin login must be created directly through the database stored procedures.)"),
    ("PA4", PointKind.POA, "LoginToSite function", "Compares authorized person credentials to those in the database and if credentials match, create a new session"),
    ("PA5", PointKind.POA, "Data entry page", "Page used to enter student or staff personal data into the database so that the admin can review it"),
    ("PA6", PointKind.POA, "RetrieveData function", "Allow the authorized person to view his/her records from the database"),
    ("PA7", PointKind.POA, "SubmitData function", "Submits student or staff data to be reviewed by the admin"),
    ("PA8", PointKind.POA, "Admin Review page", "This page used by the admin to review the student or staff request"),
    ("PA9", PointKind.POA, "RetrieveData function", "Retrieves student or staff data"),
    ("PA10", PointKind.POA, "SubmitData function", "Submits any information for the student or staff"),
    ("PA11", PointKind.POA, "ListRequests function", "Lists requests ready for review."),
    ("PA12", PointKind.POA, "Database Listening Port", "Enables the database to be used remotely by the authorized persons"),
    ("PA13", PointKind.POA, "Database stored procedures", "Store and retrieve records in the database"),
    ("PA14", PointKind.POA, "CreateLogin procedure", "Create a login for the authorized person"),
    ("PA15", PointKind.POA, "RemoveLogin procedure", "Logout from the college ERP system"),
    ("PA16", PointKind.POA, "StoreUserData procedure", "Used to store user data from the data entry page of the ERP system"),
    ("PA17", PointKind.POA, "RetrieveUserData procedure", "Retrieves the user's data and request"),
    ("PB1", PointKind.POB, "Unauthorized remote user", "A user who has connected to the ERP system, but has not provided valid credentials yet"),
    ("PB2", PointKind.POB, "Authorized remote user", "An authorized user who has created an account and has valid login credentials"),
    ("PB3", PointKind.POB, "Admin", "Admin uses login credentials to access and modify the database"),
    ("PB4", PointKind.POB, "HTTP user", "A remote user that accesses a page via HTTP"),
    ("PB5", PointKind.POB, "HTTPS user", "A remote user that accesses a page via HTTPS"),
    ("PB6", PointKind.POB, "Web server process identity", "Used to authenticate the web server to the database when storing or retrieving information"),
    ("PB7", PointKind.POB, "Database server process identity", "The account that the database server process runs as, represented by its process token"),
    ("PC1", PointKind.POC, "Online payment", "The online payment system can be another function for this ERP system. If this functionality added, this function should not provide a way for attackers to attack existing security features"),
    ("PC2", PointKind.POC, "Payment Gateway", "If added payment gateway in future, ERP system must comply with PCI DSS or other security standards"),
    ("PC3", PointKind.POC, "Encrypted Communication", "If encrypted communication functionality is added to the ERP system in the future, message exchange should be completed according to standards"),
    ("PD1", PointKind.POD, "Database Server", "The ERP system depends on the security of the database server"),
    ("PD2", PointKind.POD, "Web Server", "The ERP system depends on the security of the web server"),
    ("PD3", PointKind.POD, "Network", "The ERP system depends on the security of the network between the web server and database server"),
    ("PD4", PointKind.POD, "External SMTP", "The ERP system depends on an external SMTP server to deliver any message"),
    ("PD5", PointKind.POD, "Session Management", "The ERP system depends on the session management of the web server being secure"),
)

S, T, R, D, E = (
    Stride.SPOOFING,
    Stride.TAMPERING,
    Stride.REPUDIATION,
    Stride.DENIAL_OF_SERVICE,
    Stride.ELEVATION_OF_PRIVILEGE,
)
INFO = Stride.INFORMATION_DISCLOSURE

THREATS = (
    ("T1", "Malicious SQL data in user input", "The attacker might try to inject SQL commands into the application via Login.", (T, E), False, ("A12",)),
    ("T2", "Login Information Disclosure", "The attacker gets the login credentials of the authorized user.", (INFO, E), False, ("A2", "A3", "A4")),
    ("T3", "Session Id Theft", "The attacker gets the session ID of another authorized user.", (E,), False, ("A11",)),
    ("T4", "User Data Disclosure", "Disclosing another authorized user data raises privacy issues.", (S, INFO), False, ("A5", "A6")),
    ("T5", "Access to the Database", "The Attacker attacks to the database of the ERP system.", (T, R, INFO, E), True, ("A1", "A2", "A3", "A4", "A5", "A6")),
    ("T6", "Attack on Admin Login", "The attacker performs as an admin of the ERP system.", (E,), True, ("A4",)),
    ("T7", "Blocking Message Notification", "The attacker prevents an authorized user from receiving any notification.", (E,), True, ("A15",)),
    ("T8", "User Data Tampering", "The attacker modifies the authorized person's data.", (S, T, E), False, ("A5", "A6")),
    ("T9", "User Account Deletion", "The attacker deletes an authorized user account.", (E,), True, ("A2", "A3", "A4")),
    ("T10", "Crashing the ERP system", "The attacker crashes the ERP web application.", (E,), True, ("A8",)),
    ("T11", "Unauthorized access", "The attacker access the ERP system without valid credentials.", (E,), True, ("A5", "A6")),
    ("T12", "Access without Login", "The attacker access the information of authorized person without being logged.", (R,), False, ("A16",)),
)

# Component vectors are authored; each average must reproduce the recorded
# score exactly (sum = 5 x score).
DREAD_VECTORS = {
    "T1": (10, 10, 10, 10, 10),
    "T2": (7, 7, 7, 6, 6),
    "T3": (4, 4, 4, 4, 3),
    "T4": (10, 9, 9, 9, 9),
    "T5": (10, 10, 10, 10, 10),
    "T6": (8, 8, 8, 7, 7),
    "T7": (7, 6, 7, 6, 6),
    "T8": (9, 10, 9, 9, 9),
    "T9": (8, 7, 8, 8, 7),
    "T10": (10, 10, 10, 10, 10),
    "T11": (6, 5, 5, 5, 5),
    "T12": (7, 8, 8, 7, 8),
}

# Recorded ranking: (threat id, score in tenths), ties listed by ascending id.
EXPECTED_RANKING = (
    ("T1", 100),
    ("T5", 100),
    ("T10", 100),
    ("T4", 92),
    ("T8", 92),
    ("T6", 76),
    ("T9", 76),
    ("T12", 76),
    ("T2", 66),
    ("T7", 64),
    ("T11", 52),
    ("T3", 38),
)

# Elicited requirements in ranking order: (requirement id, threat id, text).
EXPECTED_REQUIREMENTS = (
    ("SR1", "T1", "Use of prepared statements with parameterized queries"),
    ("SR2", "T5", "Use of Access control, Auditing, Authentication, Encryption, Integrity controls, Backups techniques"),
    ("SR3", "T10", "Upgrade to the new version by fixing all identified flaws"),
    ("SR4", "T4", "Use of complex encryption methods that limits the risks of user data disclosure of ERP system"),
    ("SR5", "T8", "Use a firewall and proper authorization technique for granting the access right to use of the software system"),
    ("SR6", "T6", "Implement account lockout procedure, captcha and enforce the user of the ERP system to use strong passwords"),
    ("SR7", "T9", "Complex security password and account lockout should be used which locked the account after some failed login attempts"),
    ("SR8", "T12", "Use firewalls, VPN and SSL techniques"),
    ("SR9", "T2", "The database server of ERP system should be protected from the direct internet access by a firewall"),
    ("SR10", "T7", "Ensure the proper security of SMTP server"),
    ("SR11", "T11", "Implement two-factor authentication, i.e. strong password and one-time passcode"),
    ("SR12", "T3", "Use SSL/HTTPS encryption for the ERP system"),
)

# Comparison-scenario requirement lists, verbatim.
ASSET_MANAGEMENT_REQUIREMENTS = (
    "Use of Access control, Auditing, Authentication, Encryption, Integrity controls, Backups techniques",
    "Implement account lockout procedure, captcha and enforce the user of the ERP system to use strong passwords",
    "Use of complex encryption methods that limits the risks of user data disclosure of E-Health system",
    "Use a firewall and proper authorization technique for granting the access right to use of the software system",
    "Use HIPAA security standards and policy to ensure proper external security",
)

EHEALTH_REQUIREMENTS = (
    "Use of Access control, Auditing, Authentication, Encryption, Integrity controls, Backups techniques",
    "Implement account lockout procedure, captcha and enforce the user of the E-Health system to use strong passwords",
    "Use of complex encryption methods that limits the risks of user data disclosure of E-Health system",
    "Use a firewall and proper authorization technique for granting the access right to use of the software system",
)


def fixture_path(name: str) -> Path:
    return Path(str(files(__package__) / name))


def erp_catalog_path() -> Path:
    return fixture_path("erp_catalog.json")


def erp_catalog() -> catalog_mod.Catalog:
    return catalog_mod.load_catalog(erp_catalog_path())


def erp_project_path() -> Path:
    return fixture_path("erp_project.store.json")


def erp_commands_path() -> Path:
    return fixture_path("erp_commands.txt")


def _add_step_content(project: Project, step: int) -> Project:
    if step == 1:
        for goal_id, description in GOALS:
            project = workflow.add_entity(project, Goal(id=goal_id, description=description))
    elif step == 2:
        for sid, name, group, priority in STAKEHOLDERS:
            project = workflow.add_entity(
                project, Stakeholder(id=sid, name=name, group=group, priority=priority)
            )
    elif step == 3:
        for goal_id, _ in GOALS:
            for sid, *_rest in STAKEHOLDERS:
                project = workflow.add_entity(
                    project, Agreement(goal_id=goal_id, stakeholder_id=sid)
                )
    elif step == 4:
        for aid, name, description, cia, priority in ASSETS:
            project = workflow.add_entity(
                project,
                Asset(id=aid, name=name, description=description, cia=list(cia), priority=priority),
            )
    elif step == 5:
        for pid, kind, name, description in ATTACK_POINTS:
            project = workflow.add_entity(
                project, AttackPoint(id=pid, kind=kind, name=name, description=description)
            )
    elif step == 6:
        for tid, title, description, stride, mitigated, assets in THREATS:
            project = workflow.add_entity(
                project,
                Threat(
                    id=tid,
                    title=title,
                    description=description,
                    stride=list(stride),
                    asset_refs=list(assets),
                    mitigated=mitigated,
                ),
            )
    elif step == 7:
        for tid, *_ in THREATS:
            project = risk.set_assessment(
                project,
                RiskAssessment(
                    threat_id=tid,
                    method=RiskMethod.DREAD,
                    dread_components=list(DREAD_VECTORS[tid]),
                ),
            )
    elif step == 8:
        project = catalog_mod.elicit_all(project, erp_catalog()).project
    elif step == 9:
        for requirement in project.requirements:
            project = workflow.add_entity(
                project,
                ValidationRecord(
                    requirement_id=requirement.id,
                    reviewer=REVIEWER_ID,
                    verdict=ValidationVerdict.ACCEPTED,
                ),
            )
    elif step == 10:
        project, _, _ = docgen.generate_srs(
            project, document_path=SRS_DOCUMENT_PATH, now=GENERATED_AT
        )
    return project


def build_erp_project(through_step: int = 10) -> Project:
    """Construct the fixture by driving the real workflow, completing steps 1..N."""
    project = Project(project_id=PROJECT_ID, name=PROJECT_NAME)
    for step in range(1, through_step + 1):
        project = _add_step_content(project, step)
        project = workflow.complete_step(project, step)
    return project


_GROUP_TOKENS = {
    StakeholderGroup.MANAGERIAL: "managerial",
    StakeholderGroup.MARKETING: "marketing",
    StakeholderGroup.INFORMATION_SYSTEM: "information-system",
    StakeholderGroup.OTHER: "other",
}

_KIND_TOKENS = {
    PointKind.POA: "poa",
    PointKind.POB: "pob",
    PointKind.POC: "poc",
    PointKind.POD: "pod",
}


def erp_command_lines(catalog_token: str = "{catalog}") -> list[str]:
    """The same construction as build_erp_project, expressed as CLI commands."""

    def cmd(*args: str) -> str:
        return "store " + " ".join(shlex.quote(a) for a in args)

    lines = [cmd("init", PROJECT_NAME)]
    for goal_id, description in GOALS:
        lines.append(cmd("goal", "add", goal_id, description))
    lines.append(cmd("step", "complete", "1"))
    for sid, name, group, priority in STAKEHOLDERS:
        lines.append(
            cmd(
                "stakeholder", "add", sid, name,
                "--group", _GROUP_TOKENS[group],
                "--priority", priority.value.lower(),
            )
        )
    lines.append(cmd("step", "complete", "2"))
    for goal_id, _ in GOALS:
        for sid, *_rest in STAKEHOLDERS:
            lines.append(cmd("agree", goal_id, sid))
    lines.append(cmd("step", "complete", "3"))
    for aid, name, description, cia, priority in ASSETS:
        lines.append(
            cmd(
                "asset", "add", aid, name,
                "--description", description,
                "--cia", ",".join(f.value for f in cia),
                "--priority", priority.value.lower(),
            )
        )
    lines.append(cmd("step", "complete", "4"))
    for pid, kind, name, description in ATTACK_POINTS:
        lines.append(
            cmd("point", "add", pid, name, "--kind", _KIND_TOKENS[kind], "--description", description)
        )
    lines.append(cmd("step", "complete", "5"))
    for tid, title, description, stride, mitigated, assets in THREATS:
        args = [
            "threat", "add", tid, title,
            "--description", description,
            "--stride", ",".join(s.value for s in stride),
            "--assets", ",".join(assets),
        ]
        if mitigated:
            args.append("--mitigated")
        lines.append(cmd(*args))
    lines.append(cmd("step", "complete", "6"))
    for tid, *_ in THREATS:
        lines.append(
            cmd("risk", "set", tid, "--dread", ",".join(str(c) for c in DREAD_VECTORS[tid]))
        )
    lines.append(cmd("step", "complete", "7"))
    lines.append(cmd("elicit", "--catalog", catalog_token))
    lines.append(cmd("step", "complete", "8"))
    for rid, _tid, _text in EXPECTED_REQUIREMENTS:
        lines.append(cmd("req", "validate", rid, "--reviewer", REVIEWER_ID, "--verdict", "accepted"))
    lines.append(cmd("step", "complete", "9"))
    lines.append(cmd("doc", "srs", "--out", SRS_DOCUMENT_PATH))
    lines.append(cmd("step", "complete", "10"))
    return lines
