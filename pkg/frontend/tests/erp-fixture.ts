// The bundled college-ERP engagement, as the wizard would enter it.
// Mirrors the service package's fixture tables; the parity test drives the
// whole flow through the API with this data and must land on the same golden
// document checksum as the CLI replay.

export const PROJECT_NAME = "College ERP System";
export const REVIEWER = "SH4";

export const GOALS: Array<[string, string]> = [
  ["G1", "The college ERP system will be installed on a web server that has been secured to protect confidential information. All security patches for the web server must be enabled"],
  ["G2", "The college ERP system will also be installed on a database server that has been secured. All security patches for the database server must be enabled"],
  ["G3", "The database server must be protected from the direct access from the internet by a firewall"],
  ["G4", "The Web server should be protected from direct access from the internet by a firewall"],
  ["G5", "Only HTTP and HTTPS ports allowed direct access from the internet"],
  ["G6", "Communication between the web server and database server should be conducted over a private network"],
  ["G7", "The college ERP system should be deployed over HTTPS"],
];

export const STAKEHOLDERS: Array<[string, string, string, string]> = [
  ["SH1", "President", "Managerial", "Critical"],
  ["SH2", "Director", "Managerial", "Critical"],
  ["SH3", "Senior Executives", "Managerial", "Major"],
  ["SH4", "Internal Auditor", "Marketing", "Critical"],
  ["SH5", "Purchasing Manager", "Marketing", "Critical"],
  ["SH6", "Key users", "InformationSystem", "Major"],
  ["SH7", "End users", "InformationSystem", "Critical"],
  ["SH8", "ERP Project manager", "InformationSystem", "Critical"],
  ["SH9", "Database administrator", "InformationSystem", "Critical"],
  ["SH10", "Developer", "InformationSystem", "Critical"],
  ["SH11", "Networking team", "InformationSystem", "Major"],
];

export const ASSETS: Array<[string, string, string, string[], string]> = [
  ["A1", "Student, staff, and admin", "An asset that relates to a student, staff or admin", ["C", "I"], "High"],
  ["A2", "Student's login data", "The student's credentials: username and password", ["C", "I"], "High"],
  ["A3", "Staff login data", "The staff's credentials: username and password", ["C", "I"], "High"],
  ["A4", "Admin login data", "The admin's credentials: username and password", ["C", "I"], "High"],
  ["A5", "Student's personal data", "The personal data that the student enters, such as student record and assets", ["C", "I"], "High"],
  ["A6", "Staff's personal data", "The personal data that the staff enters, such as staff record and assets", ["C", "I"], "High"],
  ["A7", "System", "Assets that relate to the essential system", ["C", "I", "A"], "Medium"],
  ["A8", "Availability of ERP System", "If the college ERP system goes down, student/and staff cannot request or receive quotes", ["A"], "High"],
  ["A9", "Process", "Assets that relate to the process of running the web application", ["I", "A"], "Medium"],
  ["A10", "Application", "Assets that relate to the web application", ["I", "A"], "Medium"],
  ["A11", "Login Session", "The web session associated with a logged in student, staff or admin", ["C", "I"], "High"],
  ["A12", "Backend database access", "The ability to interact with the database that stores, student's data, staff data, and login credentials", ["C", "I", "A"], "High"],
  ["A13", "Student fee details", "The student's fee record must be secure. Tampering with this data could cause the loss of college", ["I"], "High"],
  ["A14", "Staff salary details", "The staff salary record must be secure. Tampering with this data could cause the loss of college", ["I"], "High"],
  ["A15", "Message Notification", "The message notification contains the information for students and staff", ["I", "A"], "Medium"],
  ["A16", "Audit data", "Attackers might try to attack the system without being logged or audited", ["I"], "Medium"],
  ["A17", "Access to the record", "Only authorized people should be able to view his/her record", ["C"], "High"],
];

export const POINTS: Array<[string, string, string, string]> = [
  ["PA1", "PoA", "Web Server Listening Port (HTTPS)", "The port (HTTPS) that the web server listens on"],
  ["PA2", "PoA", "Login Page", "Page for students or staff to create a login and perform a login to the site to begin requesting or reviewing records"],
  ["PA3", "PoA", "CreateLogin function", "Creates a new student or staff login (Admin login must be created directly through the database stored procedures.)"],
  ["PA4", "PoA", "LoginToSite function", "Compares authorized person credentials to those in the database and if credentials match, create a new session"],
  ["PA5", "PoA", "Data entry page", "Page used to enter student or staff personal data into the database so that the admin can review it"],
  ["PA6", "PoA", "RetrieveData function", "Allow the authorized person to view his/her records from the database"],
  ["PA7", "PoA", "SubmitData function", "Submits student or staff data to be reviewed by the admin"],
  ["PA8", "PoA", "Admin Review page", "This page used by the admin to review the student or staff request"],
  ["PA9", "PoA", "RetrieveData function", "Retrieves student or staff data"],
  ["PA10", "PoA", "SubmitData function", "Submits any information for the student or staff"],
  ["PA11", "PoA", "ListRequests function", "Lists requests ready for review."],
  ["PA12", "PoA", "Database Listening Port", "Enables the database to be used remotely by the authorized persons"],
  ["PA13", "PoA", "Database stored procedures", "Store and retrieve records in the database"],
  ["PA14", "PoA", "CreateLogin procedure", "Create a login for the authorized person"],
  ["PA15", "PoA", "RemoveLogin procedure", "Logout from the college ERP system"],
  ["PA16", "PoA", "StoreUserData procedure", "Used to store user data from the data entry page of the ERP system"],
  ["PA17", "PoA", "RetrieveUserData procedure", "Retrieves the user's data and request"],
  ["PB1", "PoB", "Unauthorized remote user", "A user who has connected to the ERP system, but has not provided valid credentials yet"],
  ["PB2", "PoB", "Authorized remote user", "An authorized user who has created an account and has valid login credentials"],
  ["PB3", "PoB", "Admin", "Admin uses login credentials to access and modify the database"],
  ["PB4", "PoB", "HTTP user", "A remote user that accesses a page via HTTP"],
  ["PB5", "PoB", "HTTPS user", "A remote user that accesses a page via HTTPS"],
  ["PB6", "PoB", "Web server process identity", "Used to authenticate the web server to the database when storing or retrieving information"],
  ["PB7", "PoB", "Database server process identity", "The account that the database server process runs as, represented by its process token"],
  ["PC1", "PoC", "Online payment", "The online payment system can be another function for this ERP system. If this functionality added, this function should not provide a way for attackers to attack existing security features"],
  ["PC2", "PoC", "Payment Gateway", "If added payment gateway in future, ERP system must comply with PCI DSS or other security standards"],
  ["PC3", "PoC", "Encrypted Communication", "If encrypted communication functionality is added to the ERP system in the future, message exchange should be completed according to standards"],
  ["PD1", "PoD", "Database Server", "The ERP system depends on the security of the database server"],
  ["PD2", "PoD", "Web Server", "The ERP system depends on the security of the web server"],
  ["PD3", "PoD", "Network", "The ERP system depends on the security of the network between the web server and database server"],
  ["PD4", "PoD", "External SMTP", "The ERP system depends on an external SMTP server to deliver any message"],
  ["PD5", "PoD", "Session Management", "The ERP system depends on the session management of the web server being secure"],
];

export const THREATS: Array<[string, string, string, string[], boolean, string[]]> = [
  ["T1", "Malicious SQL data in user input", "The attacker might try to inject SQL commands into the application via Login.", ["T", "E"], false, ["A12"]],
  ["T2", "Login Information Disclosure", "The attacker gets the login credentials of the authorized user.", ["I", "E"], false, ["A2", "A3", "A4"]],
  ["T3", "Session Id Theft", "The attacker gets the session ID of another authorized user.", ["E"], false, ["A11"]],
  ["T4", "User Data Disclosure", "Disclosing another authorized user data raises privacy issues.", ["S", "I"], false, ["A5", "A6"]],
  ["T5", "Access to the Database", "The Attacker attacks to the database of the ERP system.", ["T", "R", "I", "E"], true, ["A1", "A2", "A3", "A4", "A5", "A6"]],
  ["T6", "Attack on Admin Login", "The attacker performs as an admin of the ERP system.", ["E"], true, ["A4"]],
  ["T7", "Blocking Message Notification", "The attacker prevents an authorized user from receiving any notification.", ["E"], true, ["A15"]],
  ["T8", "User Data Tampering", "The attacker modifies the authorized person's data.", ["S", "T", "E"], false, ["A5", "A6"]],
  ["T9", "User Account Deletion", "The attacker deletes an authorized user account.", ["E"], true, ["A2", "A3", "A4"]],
  ["T10", "Crashing the ERP system", "The attacker crashes the ERP web application.", ["E"], true, ["A8"]],
  ["T11", "Unauthorized access", "The attacker access the ERP system without valid credentials.", ["E"], true, ["A5", "A6"]],
  ["T12", "Access without Login", "The attacker access the information of authorized person without being logged.", ["R"], false, ["A16"]],
];

export const DREAD_VECTORS: Record<string, number[]> = {
  T1: [10, 10, 10, 10, 10],
  T2: [7, 7, 7, 6, 6],
  T3: [4, 4, 4, 4, 3],
  T4: [10, 9, 9, 9, 9],
  T5: [10, 10, 10, 10, 10],
  T6: [8, 8, 8, 7, 7],
  T7: [7, 6, 7, 6, 6],
  T8: [9, 10, 9, 9, 9],
  T9: [8, 7, 8, 8, 7],
  T10: [10, 10, 10, 10, 10],
  T11: [6, 5, 5, 5, 5],
  T12: [7, 8, 8, 7, 8],
};

export const EXPECTED_RANKING: Array<[string, number]> = [
  ["T1", 100],
  ["T5", 100],
  ["T10", 100],
  ["T4", 92],
  ["T8", 92],
  ["T6", 76],
  ["T9", 76],
  ["T12", 76],
  ["T2", 66],
  ["T7", 64],
  ["T11", 52],
  ["T3", 38],
];

export const EXPECTED_REQUIREMENT_IDS = [
  "SR1", "SR2", "SR3", "SR4", "SR5", "SR6", "SR7", "SR8", "SR9", "SR10", "SR11", "SR12",
];
