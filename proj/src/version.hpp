#pragma once

#define ETAQ_VERSION_STRING "0.1.0"
