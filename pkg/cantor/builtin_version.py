# This file is automatically generated. Do not edit.
version = '0.1.0'
